#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>

#include "asymptest/sample.hpp"

namespace asymptest {

enum class Law { Normal, Exponential, Uniform, ChiSquare };

/**
 * A samplable law with closed-form mean, variance and kurtosis.
 *
 *   normal(mu, sigma)      sigma > 0
 *   exponential(rate)      rate > 0, mean 1 / rate
 *   uniform(a, b)          a < b
 *   chi2(nu)               nu > 0, not necessarily an integer
 *
 * The factories validate their arguments and throw DomainError.
 */
struct DistributionSpec {
    Law law = Law::Normal;
    double first = 0.0;
    double second = 1.0;

    static DistributionSpec normal(double mu, double sigma);
    static DistributionSpec exponential(double rate);
    static DistributionSpec uniform(double a, double b);
    static DistributionSpec chi2(double nu);

    void validate() const;
    /// Short label such as "exp(1)" or "unif(0,5)".
    [[nodiscard]] std::string describe() const;

    friend bool operator==(const DistributionSpec&, const DistributionSpec&) = default;
};

struct TheoreticalMoments {
    double mean;
    double variance;
    double kurtosis;
};

[[nodiscard]] TheoreticalMoments theoretical_moments(const DistributionSpec& spec);

/// Addresses one reproducible substream: streams with different indices
/// under the same master seed are independent.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;
};

/**
 * 64-bit Mersenne Twister keyed by (master_seed, stream_index) through
 * std::seed_seq. Both algorithms are fully specified by the standard, so a
 * stream is bit-identical on every conforming implementation, and any stream
 * can be opened directly without advancing through the others.
 */
class RandomStream {
public:
    using result_type = std::uint64_t;

    explicit RandomStream(SeedSpec seed);

    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }
    result_type operator()() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    /// Uniform on (0, 1].
    double uniform_positive() { return 1.0 - uniform(); }

private:
    std::mt19937_64 engine_;
};

/// Fills `out` with i.i.d. draws from `spec`.
void fill(const DistributionSpec& spec, std::span<double> out, RandomStream& stream);

/// n i.i.d. draws; identical output for identical (spec, n, seed).
[[nodiscard]] Sample sample(const DistributionSpec& spec, std::size_t n, SeedSpec seed);

}  // namespace asymptest
