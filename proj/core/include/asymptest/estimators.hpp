#pragma once

#include "asymptest/sample.hpp"

namespace asymptest {

/// Relative threshold below which a ratio denominator counts as zero.
/// The absolute cut-off is this value times Sample::scale() of the
/// denominator sample.
inline constexpr double kNearZeroRelTol = 1e-12;

/**
 * First and second moment diagnostics of one sample.
 *
 * `centered_squares_var` is the unbiased sample variance of the vector of
 * squared deviations (Y_i - mean)^2. It is the quantity every variance-type
 * standard error is built from.
 *
 * `kurtosis` is m4 / m2^2 with divisor-n central moments. It is quiet NaN for
 * a constant sample.
 */
struct MomentSummary {
    double mean = 0.0;
    double var = 0.0;
    double centered_squares_var = 0.0;
    double kurtosis = 0.0;
};

[[nodiscard]] double mean(const Sample& s);

/// Sample variance with divisor n - 1, computed in two passes.
[[nodiscard]] double var_unbiased(const Sample& s);

[[nodiscard]] MomentSummary moment_summary(const Sample& s);

// Standard errors of the six estimators.

/// sqrt(var / n)
[[nodiscard]] double se_mean(const Sample& s);
/// sqrt(centered_squares_var / n)
[[nodiscard]] double se_var(const Sample& s);
/// Standard error of mean(s1) - rho * mean(s2).
[[nodiscard]] double se_dmean(const Sample& s1, const Sample& s2, double rho = 1.0);
/// Standard error of var(s1) - rho * var(s2).
[[nodiscard]] double se_dvar(const Sample& s1, const Sample& s2, double rho = 1.0);

/// Delta-method standard error of mean(s1) / mean(s2).
/// Throws NearZeroDenominator when |mean(s2)| is numerically zero.
[[nodiscard]] double se_rmean(const Sample& s1, const Sample& s2);

/// Delta-method standard error of var(s1) / var(s2).
/// Throws NearZeroDenominator when var(s2) is numerically zero.
[[nodiscard]] double se_rvar(const Sample& s1, const Sample& s2);

/// Throws NearZeroDenominator if `denominator` is below kNearZeroRelTol * s.scale().
void require_nonzero_denominator(double denominator, const Sample& s, const char* what);

}  // namespace asymptest
