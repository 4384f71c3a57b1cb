#pragma once

#include <string_view>

namespace asymptest {

/**
 * CDFs, survival functions and quantiles of the reference laws used by the
 * tests: standard normal, chi-square, Fisher F, and the centered reduced
 * ("standardized") chi-square and F.
 *
 * Every function is pure and reentrant. Invalid degrees of freedom,
 * probabilities outside (0, 1) and NaN arguments raise DomainError.
 */

[[nodiscard]] double std_normal_cdf(double x);
[[nodiscard]] double std_normal_sf(double x);
[[nodiscard]] double std_normal_quantile(double p);

[[nodiscard]] double chi2_cdf(double x, double df);
[[nodiscard]] double chi2_sf(double x, double df);
[[nodiscard]] double chi2_quantile(double p, double df);

[[nodiscard]] double f_cdf(double x, double df1, double df2);
[[nodiscard]] double f_sf(double x, double df1, double df2);
[[nodiscard]] double f_quantile(double p, double df1, double df2);

/// CDF of (X - df) / sqrt(2 df) with X ~ chi2(df).
[[nodiscard]] double chi2_cr_cdf(double x, double df);
[[nodiscard]] double chi2_cr_quantile(double p, double df);

/// Scale of the centered reduced F: sqrt(2/n1 + 2/n2) with n_j = df_j + 1.
[[nodiscard]] double f_cr_scale(double df1, double df2);
/// CDF of (X - 1) / f_cr_scale(df1, df2) with X ~ F(df1, df2).
[[nodiscard]] double f_cr_cdf(double x, double df1, double df2);
[[nodiscard]] double f_cr_quantile(double p, double df1, double df2);

enum class Family { Normal, Chi2, F, Chi2Cr, FCr };

[[nodiscard]] std::string_view to_string(Family family);

/// One evaluation request against a named family. df1 is ignored for the
/// normal family, df2 is used only by the F families.
struct DistributionQuery {
    Family family = Family::Normal;
    double df1 = 1.0;
    double df2 = 1.0;
    double point_or_prob = 0.0;
};

[[nodiscard]] double evaluate_cdf(const DistributionQuery& q);
[[nodiscard]] double evaluate_quantile(const DistributionQuery& q);

}  // namespace asymptest
