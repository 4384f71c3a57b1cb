#include "asymptest/hypothesis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "asymptest/distributions.hpp"
#include "asymptest/error.hpp"
#include "asymptest/estimators.hpp"

namespace asymptest {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct PointAndError {
    double estimate;
    double std_err;
};

void check_arity(Parameter p, const Sample* y) {
    if (is_two_sample(p) && y == nullptr) {
        throw ArityError("parameter '" + std::string(to_string(p)) + "' needs a second sample");
    }
    if (!is_two_sample(p) && y != nullptr) {
        throw ArityError("parameter '" + std::string(to_string(p)) + "' takes a single sample");
    }
}

void check_spec(const TestSpec& spec) {
    if (!(spec.conf_level > 0.0 && spec.conf_level < 1.0)) {
        throw DomainError("confidence level must lie strictly inside (0, 1)");
    }
    if (!std::isfinite(spec.reference)) throw DomainError("reference value must be finite");
    if (!std::isfinite(spec.rho)) throw DomainError("rho must be finite");
    const bool weighted = spec.parameter == Parameter::DMean || spec.parameter == Parameter::DVar;
    if (!weighted && spec.rho != 1.0) {
        throw UsageError("rho is only used for parameters dMean and dVar");
    }
    if (spec.parameter == Parameter::RVar && !(spec.reference > 0.0)) {
        throw DomainError("reference ratio of variances must be positive");
    }
}

PointAndError evaluate(Parameter p, const Sample& x, const Sample* y, double rho) {
    check_arity(p, y);
    switch (p) {
        case Parameter::Mean:
            return {mean(x), se_mean(x)};
        case Parameter::Var: {
            const MomentSummary m = moment_summary(x);
            return {m.var, std::sqrt(m.centered_squares_var / static_cast<double>(x.size()))};
        }
        case Parameter::DMean:
            return {mean(x) - rho * mean(*y), se_dmean(x, *y, rho)};
        case Parameter::DVar: {
            const MomentSummary a = moment_summary(x);
            const MomentSummary b = moment_summary(*y);
            const double se = std::sqrt(a.centered_squares_var / static_cast<double>(x.size()) +
                                        rho * rho * b.centered_squares_var /
                                            static_cast<double>(y->size()));
            return {a.var - rho * b.var, se};
        }
        case Parameter::RMean: {
            const double denominator = mean(*y);
            require_nonzero_denominator(denominator, *y, "mean of the second sample");
            return {mean(x) / denominator, se_rmean(x, *y)};
        }
        case Parameter::RVar: {
            const MomentSummary a = moment_summary(x);
            const MomentSummary b = moment_summary(*y);
            require_nonzero_denominator(b.var, *y, "variance of the second sample");
            const double ratio = a.var / b.var;
            const double se = std::sqrt(a.centered_squares_var / static_cast<double>(x.size()) +
                                        ratio * ratio * b.centered_squares_var /
                                            static_cast<double>(y->size())) /
                              b.var;
            return {ratio, se};
        }
    }
    throw UsageError("unknown parameter");
}

std::string method_label(Parameter p, double rho) {
    const std::string prefix = is_two_sample(p) ? "Two-sample asymptotic " : "One-sample asymptotic ";
    return prefix + parameter_label(p, rho) + " test";
}

bool small_sample(const Sample& x, const Sample* y) {
    std::size_t n = x.size();
    if (y != nullptr) n = std::min(n, y->size());
    return n < kSmallSampleThreshold;
}

TestResult run_asymptotic(const Sample& x, const Sample* y, const TestSpec& spec) {
    check_arity(spec.parameter, y);
    check_spec(spec);
    const PointAndError pe = evaluate(spec.parameter, x, y, spec.rho);
    if (!(pe.std_err > 0.0)) {
        throw DegenerateSample("standard error is zero; the statistic is undefined");
    }

    TestResult r;
    r.estimate = pe.estimate;
    r.std_err = pe.std_err;
    r.statistic = (pe.estimate - spec.reference) / pe.std_err;
    const double lower_tail = std_normal_cdf(r.statistic);
    r.p_value = tail_p_value(lower_tail, 1.0 - lower_tail, spec.alternative);

    const double alpha = 1.0 - spec.conf_level;
    switch (spec.alternative) {
        case Alternative::TwoSided: {
            const double z = std_normal_quantile(1.0 - alpha / 2.0);
            r.ci_lower = pe.estimate - z * pe.std_err;
            r.ci_upper = pe.estimate + z * pe.std_err;
            break;
        }
        case Alternative::Less:
            r.ci_lower = -kInf;
            r.ci_upper = pe.estimate + std_normal_quantile(1.0 - alpha) * pe.std_err;
            break;
        case Alternative::Greater:
            r.ci_lower = pe.estimate - std_normal_quantile(1.0 - alpha) * pe.std_err;
            r.ci_upper = kInf;
            break;
    }
    r.method = method_label(spec.parameter, spec.rho);
    r.small_sample_warning = small_sample(x, y);
    return r;
}

}  // namespace

std::string_view to_string(Parameter p) {
    switch (p) {
        case Parameter::Mean: return "mean";
        case Parameter::Var: return "var";
        case Parameter::DMean: return "dMean";
        case Parameter::DVar: return "dVar";
        case Parameter::RMean: return "rMean";
        case Parameter::RVar: return "rVar";
    }
    return "unknown";
}

std::string_view to_string(Alternative a) {
    switch (a) {
        case Alternative::TwoSided: return "two.sided";
        case Alternative::Greater: return "greater";
        case Alternative::Less: return "less";
    }
    return "unknown";
}

bool is_two_sample(Parameter p) {
    return p != Parameter::Mean && p != Parameter::Var;
}

std::string parameter_label(Parameter p, double rho) {
    const bool weighted = rho != 1.0;
    switch (p) {
        case Parameter::Mean: return "mean";
        case Parameter::Var: return "variance";
        case Parameter::DMean: return weighted ? "difference of (weighted) means" : "difference of means";
        case Parameter::DVar:
            return weighted ? "difference of (weighted) variances" : "difference of variances";
        case Parameter::RMean: return "ratio of means";
        case Parameter::RVar: return "ratio of variances";
    }
    return "unknown";
}

double estimate(Parameter p, const Sample& x, const Sample* y, double rho) {
    return evaluate(p, x, y, rho).estimate;
}

double standard_error(Parameter p, const Sample& x, const Sample* y, double rho) {
    return evaluate(p, x, y, rho).std_err;
}

double tail_p_value(double lower, double upper, Alternative alt) {
    switch (alt) {
        case Alternative::Less: return lower;
        case Alternative::Greater: return upper;
        case Alternative::TwoSided: return std::min(1.0, 2.0 * std::min(lower, upper));
    }
    return 1.0;
}

TestResult asymp_test(const Sample& x, const TestSpec& spec) {
    return run_asymptotic(x, nullptr, spec);
}

TestResult asymp_test(const Sample& x, const Sample& y, const TestSpec& spec) {
    return run_asymptotic(x, &y, spec);
}

Interval chisq_interval(double variance, double df, Alternative alt, double conf_level) {
    const double alpha = 1.0 - conf_level;
    const double scaled = df * variance;
    switch (alt) {
        case Alternative::TwoSided:
            return {scaled / chi2_quantile(1.0 - alpha / 2.0, df), scaled / chi2_quantile(alpha / 2.0, df)};
        case Alternative::Less:
            return {0.0, scaled / chi2_quantile(alpha, df)};
        case Alternative::Greater:
            return {scaled / chi2_quantile(1.0 - alpha, df), kInf};
    }
    return {0.0, kInf};
}

Interval fisher_interval(double ratio, double df1, double df2, Alternative alt, double conf_level) {
    const double alpha = 1.0 - conf_level;
    switch (alt) {
        case Alternative::TwoSided:
            return {ratio / f_quantile(1.0 - alpha / 2.0, df1, df2),
                    ratio / f_quantile(alpha / 2.0, df1, df2)};
        case Alternative::Less:
            return {0.0, ratio / f_quantile(alpha, df1, df2)};
        case Alternative::Greater:
            return {ratio / f_quantile(1.0 - alpha, df1, df2), kInf};
    }
    return {0.0, kInf};
}

TestResult chisq_var_test(const Sample& x, const TestSpec& spec) {
    if (spec.parameter != Parameter::Var) {
        throw UsageError("the chi-square test applies to parameter 'var' only");
    }
    check_spec(spec);
    if (!(spec.reference > 0.0)) throw DomainError("reference variance must be positive");

    const double df = static_cast<double>(x.size()) - 1.0;
    const double v = var_unbiased(x);

    TestResult r;
    r.estimate = v;
    r.std_err = v * std::sqrt(2.0 / df);
    r.statistic = df * v / spec.reference;
    r.p_value = tail_p_value(chi2_cdf(r.statistic, df), chi2_sf(r.statistic, df), spec.alternative);
    const Interval ci = chisq_interval(v, df, spec.alternative, spec.conf_level);
    r.ci_lower = ci.lower;
    r.ci_upper = ci.upper;
    r.method = "One-sample chi-square variance test";
    r.small_sample_warning = small_sample(x, nullptr);
    return r;
}

TestResult fisher_ratio_test(const Sample& x, const Sample& y, const TestSpec& spec) {
    if (spec.parameter != Parameter::RVar) {
        throw UsageError("the F test applies to parameter 'rVar' only");
    }
    check_spec(spec);

    const double v1 = var_unbiased(x);
    const double v2 = var_unbiased(y);
    if (!(v1 > 0.0) || std::abs(v2) < kNearZeroRelTol * y.scale()) {
        throw DomainError("the F test needs two samples with positive variances");
    }
    const double df1 = static_cast<double>(x.size()) - 1.0;
    const double df2 = static_cast<double>(y.size()) - 1.0;
    const double ratio = v1 / v2;

    TestResult r;
    r.estimate = ratio;
    r.std_err = ratio * std::sqrt(2.0 / static_cast<double>(x.size()) +
                                  2.0 / static_cast<double>(y.size()));
    r.statistic = ratio / spec.reference;
    r.p_value = tail_p_value(f_cdf(r.statistic, df1, df2), f_sf(r.statistic, df1, df2),
                             spec.alternative);
    const Interval ci = fisher_interval(ratio, df1, df2, spec.alternative, spec.conf_level);
    r.ci_lower = ci.lower;
    r.ci_upper = ci.upper;
    r.method = "F test to compare two variances";
    r.small_sample_warning = small_sample(x, &y);
    return r;
}

}  // namespace asymptest
