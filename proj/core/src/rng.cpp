#include "asymptest/rng.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "asymptest/error.hpp"

namespace asymptest {

namespace {

// Box-Muller, keeping the second variate of each pair.
class NormalSource {
public:
    explicit NormalSource(RandomStream& stream) : stream_(stream) {}

    double operator()() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double radius = std::sqrt(-2.0 * std::log(stream_.uniform_positive()));
        const double angle = 2.0 * std::numbers::pi * stream_.uniform();
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

private:
    RandomStream& stream_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Marsaglia-Tsang squeeze for shape >= 1; boosted with U^(1/shape) below 1.
double standard_gamma(double shape, RandomStream& stream, NormalSource& normal) {
    if (shape < 1.0) {
        const double boost = std::pow(stream.uniform_positive(), 1.0 / shape);
        return standard_gamma(shape + 1.0, stream, normal) * boost;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = stream.uniform_positive();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

}  // namespace

DistributionSpec DistributionSpec::normal(double mu, double sigma) {
    DistributionSpec s{Law::Normal, mu, sigma};
    s.validate();
    return s;
}

DistributionSpec DistributionSpec::exponential(double rate) {
    DistributionSpec s{Law::Exponential, rate, 0.0};
    s.validate();
    return s;
}

DistributionSpec DistributionSpec::uniform(double a, double b) {
    DistributionSpec s{Law::Uniform, a, b};
    s.validate();
    return s;
}

DistributionSpec DistributionSpec::chi2(double nu) {
    DistributionSpec s{Law::ChiSquare, nu, 0.0};
    s.validate();
    return s;
}

void DistributionSpec::validate() const {
    switch (law) {
        case Law::Normal:
            if (!std::isfinite(first) || !(second > 0.0) || !std::isfinite(second)) {
                throw DomainError("normal law needs a finite mean and sigma > 0");
            }
            return;
        case Law::Exponential:
            if (!(first > 0.0) || !std::isfinite(first)) {
                throw DomainError("exponential law needs rate > 0");
            }
            return;
        case Law::Uniform:
            if (!std::isfinite(first) || !std::isfinite(second) || !(first < second)) {
                throw DomainError("uniform law needs finite bounds a < b");
            }
            return;
        case Law::ChiSquare:
            if (!(first > 0.0) || !std::isfinite(first)) {
                throw DomainError("chi-square law needs nu > 0");
            }
            return;
    }
    throw DomainError("unknown law");
}

std::string DistributionSpec::describe() const {
    std::ostringstream os;
    switch (law) {
        case Law::Normal: os << "norm(" << first << ',' << second << ')'; break;
        case Law::Exponential: os << "exp(" << first << ')'; break;
        case Law::Uniform: os << "unif(" << first << ',' << second << ')'; break;
        case Law::ChiSquare: os << "chi2(" << first << ')'; break;
    }
    return os.str();
}

TheoreticalMoments theoretical_moments(const DistributionSpec& spec) {
    spec.validate();
    switch (spec.law) {
        case Law::Normal:
            return {spec.first, spec.second * spec.second, 3.0};
        case Law::Exponential: {
            const double scale = 1.0 / spec.first;
            return {scale, scale * scale, 9.0};
        }
        case Law::Uniform: {
            const double width = spec.second - spec.first;
            return {0.5 * (spec.first + spec.second), width * width / 12.0, 1.8};
        }
        case Law::ChiSquare:
            return {spec.first, 2.0 * spec.first, 3.0 + 12.0 / spec.first};
    }
    throw DomainError("unknown law");
}

RandomStream::RandomStream(SeedSpec seed) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed.master_seed),
        static_cast<std::uint32_t>(seed.master_seed >> 32),
        static_cast<std::uint32_t>(seed.stream_index),
        static_cast<std::uint32_t>(seed.stream_index >> 32),
    };
    engine_.seed(seq);
}

void fill(const DistributionSpec& spec, std::span<double> out, RandomStream& stream) {
    spec.validate();
    switch (spec.law) {
        case Law::Normal: {
            NormalSource normal(stream);
            for (double& v : out) v = spec.first + spec.second * normal();
            return;
        }
        case Law::Exponential:
            for (double& v : out) v = -std::log(stream.uniform_positive()) / spec.first;
            return;
        case Law::Uniform: {
            const double width = spec.second - spec.first;
            for (double& v : out) v = spec.first + width * stream.uniform();
            return;
        }
        case Law::ChiSquare: {
            NormalSource normal(stream);
            const double shape = 0.5 * spec.first;
            for (double& v : out) v = 2.0 * standard_gamma(shape, stream, normal);
            return;
        }
    }
}

Sample sample(const DistributionSpec& spec, std::size_t n, SeedSpec seed) {
    if (n < 2) throw InvalidSample("sample size must be at least 2");
    std::vector<double> values(n);
    RandomStream stream(seed);
    fill(spec, values, stream);
    return Sample(std::move(values));
}

}  // namespace asymptest
