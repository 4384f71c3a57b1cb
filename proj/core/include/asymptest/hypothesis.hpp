#pragma once

#include <string>
#include <string_view>

#include "asymptest/sample.hpp"

namespace asymptest {

enum class Parameter { Mean, Var, DMean, DVar, RMean, RVar };
enum class Alternative { TwoSided, Greater, Less };

[[nodiscard]] std::string_view to_string(Parameter p);
[[nodiscard]] std::string_view to_string(Alternative a);
[[nodiscard]] bool is_two_sample(Parameter p);
/// Human-readable parameter name, e.g. "difference of (weighted) means".
[[nodiscard]] std::string parameter_label(Parameter p, double rho = 1.0);

/// Below this smallest sample size a result carries small_sample_warning.
inline constexpr std::size_t kSmallSampleThreshold = 30;

struct TestSpec {
    Parameter parameter = Parameter::Mean;
    Alternative alternative = Alternative::TwoSided;
    double reference = 0.0;
    double conf_level = 0.95;
    /// Weight of the second sample; only meaningful for DMean and DVar.
    double rho = 1.0;
};

struct TestResult {
    double statistic = 0.0;
    double p_value = 1.0;
    double ci_lower = 0.0;
    double ci_upper = 0.0;
    double estimate = 0.0;
    double std_err = 0.0;
    std::string method;
    bool small_sample_warning = false;
};

/// Point estimate of the parameter (mean, variance, weighted difference or
/// ratio). Throws ArityError on a sample-count mismatch.
[[nodiscard]] double estimate(Parameter p, const Sample& x, const Sample* y, double rho = 1.0);

/// Matching standard error from the estimators module.
[[nodiscard]] double standard_error(Parameter p, const Sample& x, const Sample* y, double rho = 1.0);

/**
 * Large-sample test of (estimate - reference) / standard_error against
 * N(0, 1), with the matching Wald confidence interval.
 *
 * p-values: less = Phi(t), greater = 1 - Phi(t),
 * two-sided = 2 min(Phi(t), 1 - Phi(t)).
 * Intervals use z_{1-alpha/2} when two-sided and z_{1-alpha} for one-sided
 * bounds, with alpha = 1 - conf_level.
 *
 * Errors: ArityError when y is given for a one-sample parameter or missing
 * for a two-sample one; UsageError for rho != 1 outside DMean/DVar or an
 * invalid conf_level/reference; DegenerateSample when the standard error is
 * zero; NearZeroDenominator from the ratio estimators.
 */
[[nodiscard]] TestResult asymp_test(const Sample& x, const TestSpec& spec);
[[nodiscard]] TestResult asymp_test(const Sample& x, const Sample& y, const TestSpec& spec);

/// Classical chi-square test of a variance, exact under Gaussian data.
/// Requires spec.parameter == Var and spec.reference > 0.
[[nodiscard]] TestResult chisq_var_test(const Sample& x, const TestSpec& spec);

/// Classical F test of a ratio of variances, exact under Gaussian data.
/// Requires spec.parameter == RVar, spec.reference > 0 and nonzero variances.
[[nodiscard]] TestResult fisher_ratio_test(const Sample& x, const Sample& y, const TestSpec& spec);

/// Interval bounds for the F test given the observed variance ratio.
struct Interval {
    double lower;
    double upper;
};
[[nodiscard]] Interval fisher_interval(double ratio, double df1, double df2, Alternative alt,
                                       double conf_level);
[[nodiscard]] Interval chisq_interval(double variance, double df, Alternative alt,
                                      double conf_level);

/// p-value of a statistic whose null law has the given lower and upper tails
/// at the observed value: less -> lower, greater -> upper,
/// two-sided -> min(1, 2 min(lower, upper)).
[[nodiscard]] double tail_p_value(double lower, double upper, Alternative alt);

}  // namespace asymptest
