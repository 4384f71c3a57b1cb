#pragma once

// Independent reference implementations used only by the tests. None of them
// shares code with the library: they are deliberately slow and simple.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

// erf by its Maclaurin series; accurate to ~1e-15 for |x| <= 3.
inline double erf_series(double x) {
    double term = x;
    double sum = x;
    for (int k = 1; k < 200; ++k) {
        term *= -x * x / k;
        const double add = term / (2 * k + 1);
        sum += add;
        if (std::abs(add) < 1e-18 * std::abs(sum)) break;
    }
    return 2.0 / std::sqrt(std::numbers::pi) * sum;
}

// Upper normal tail for x > 0 by the Laplace continued fraction, evaluated
// bottom-up with a fixed depth. Good to full precision for x >= 3.
inline double normal_upper_tail_cf(double x) {
    double f = x;
    for (int k = 300; k >= 1; --k) f = x + k / f;
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi) / f;
}

inline double normal_cdf(double x) {
    if (x > 3.0) return 1.0 - normal_upper_tail_cf(x);
    if (x < -3.0) return normal_upper_tail_cf(-x);
    return 0.5 * (1.0 + erf_series(x / std::numbers::sqrt2));
}

// Composite Simpson rule with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 20000) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    return s * h / 3.0;
}

inline double chi2_density(double x, double df) {
    if (x <= 0.0) return df == 2.0 ? 0.5 : 0.0;
    return std::exp((0.5 * df - 1.0) * std::log(x) - 0.5 * x - 0.5 * df * std::log(2.0) - std::lgamma(0.5 * df));
}

inline double f_density(double x, double d1, double d2) {
    if (x <= 0.0) return d1 == 2.0 ? 1.0 : 0.0;
    const double log_b = std::lgamma(0.5 * d1) + std::lgamma(0.5 * d2) - std::lgamma(0.5 * (d1 + d2));
    return std::exp(0.5 * d1 * std::log(d1 / d2) + (0.5 * d1 - 1.0) * std::log(x) -
                    0.5 * (d1 + d2) * std::log1p(d1 * x / d2) - log_b);
}

// CDFs by quadrature of the density; valid for df >= 2 (bounded density).
// The substitution t = u^2 removes the sqrt(t) kink of odd degrees of freedom.
inline double chi2_cdf_quadrature(double x, double df) {
    return simpson([df](double u) { return 2.0 * u * chi2_density(u * u, df); }, 0.0, std::sqrt(x));
}

inline double f_cdf_quadrature(double x, double d1, double d2) {
    return simpson([d1, d2](double t) { return f_density(t, d1, d2); }, 0.0, x);
}

// Newton inversion of an increasing CDF given its density.
inline double invert(const std::function<double(double)>& cdf, const std::function<double(double)>& pdf,
                     double p, double x0) {
    double x = x0;
    for (int i = 0; i < 100; ++i) {
        const double step = (cdf(x) - p) / pdf(x);
        x -= step;
        if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(x))) break;
    }
    return x;
}

inline double normal_quantile(double p) {
    return invert(normal_cdf,
                  [](double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }, p, 0.0);
}

// Two-sided Kolmogorov distance between the empirical CDF of `xs` and `cdf`.
inline double kolmogorov_distance(std::vector<double> xs, const std::function<double(double)>& cdf) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(xs[i]);
        d = std::max({d, std::abs(static_cast<double>(i + 1) / n - f), std::abs(f - static_cast<double>(i) / n)});
    }
    return d;
}

// Plain-loop moments with long double accumulation.
inline double mean(const std::vector<double>& v) {
    long double s = 0;
    for (double x : v) s += x;
    return static_cast<double>(s / v.size());
}

inline double variance(const std::vector<double>& v) {
    const long double m = mean(v);
    long double s = 0;
    for (double x : v) s += (x - m) * (x - m);
    return static_cast<double>(s / (v.size() - 1));
}

inline double kurtosis(const std::vector<double>& v) {
    const long double m = mean(v);
    long double m2 = 0;
    long double m4 = 0;
    for (double x : v) {
        const long double d = (x - m) * (x - m);
        m2 += d;
        m4 += d * d;
    }
    m2 /= v.size();
    m4 /= v.size();
    return static_cast<double>(m4 / (m2 * m2));
}

// Random sample generator for property tests, independent of the library RNG.
struct SampleGen {
    std::mt19937_64 engine;
    explicit SampleGen(std::uint64_t seed) : engine(seed) {}

    std::vector<double> draw(std::size_t n) {
        std::uniform_int_distribution<int> law(0, 3);
        std::vector<double> out(n);
        switch (law(engine)) {
            case 0: {
                std::normal_distribution<double> d(std::uniform_real_distribution<double>(-5, 5)(engine),
                                                   std::uniform_real_distribution<double>(0.1, 3)(engine));
                for (double& x : out) x = d(engine);
                break;
            }
            case 1: {
                std::exponential_distribution<double> d(std::uniform_real_distribution<double>(0.2, 3)(engine));
                for (double& x : out) x = d(engine);
                break;
            }
            case 2: {
                const double a = std::uniform_real_distribution<double>(-3, 3)(engine);
                std::uniform_real_distribution<double> d(a, a + std::uniform_real_distribution<double>(0.5, 5)(engine));
                for (double& x : out) x = d(engine);
                break;
            }
            default: {
                std::gamma_distribution<double> d(std::uniform_real_distribution<double>(0.5, 5)(engine), 1.0);
                for (double& x : out) x = d(engine);
            }
        }
        return out;
    }

    std::size_t size(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(engine);
    }

    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine); }
};

}  // namespace oracle
