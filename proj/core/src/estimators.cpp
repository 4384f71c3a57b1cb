#include "asymptest/estimators.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "asymptest/error.hpp"

namespace asymptest {

namespace {

double count(const Sample& s) { return static_cast<double>(s.size()); }

}  // namespace

double mean(const Sample& s) {
    const auto v = s.values();
    return std::accumulate(v.begin(), v.end(), 0.0) / count(s);
}

double var_unbiased(const Sample& s) {
    const double m = mean(s);
    double ss = 0.0;
    for (double y : s.values()) {
        const double d = y - m;
        ss += d * d;
    }
    return ss / (count(s) - 1.0);
}

MomentSummary moment_summary(const Sample& s) {
    const double n = count(s);
    MomentSummary out;
    out.mean = mean(s);

    double m2 = 0.0;
    double m4 = 0.0;
    for (double y : s.values()) {
        const double d2 = (y - out.mean) * (y - out.mean);
        m2 += d2;
        m4 += d2 * d2;
    }
    out.var = m2 / (n - 1.0);

    // Unbiased variance of the squared deviations, centered at their own mean.
    const double sq_mean = m2 / n;
    double sq_ss = 0.0;
    for (double y : s.values()) {
        const double e = (y - out.mean) * (y - out.mean) - sq_mean;
        sq_ss += e * e;
    }
    out.centered_squares_var = sq_ss / (n - 1.0);

    m2 /= n;
    m4 /= n;
    out.kurtosis = m2 > 0.0 ? m4 / (m2 * m2) : std::numeric_limits<double>::quiet_NaN();
    return out;
}

double se_mean(const Sample& s) { return std::sqrt(var_unbiased(s) / count(s)); }

double se_var(const Sample& s) {
    return std::sqrt(moment_summary(s).centered_squares_var / count(s));
}

double se_dmean(const Sample& s1, const Sample& s2, double rho) {
    return std::sqrt(var_unbiased(s1) / count(s1) +
                     rho * rho * var_unbiased(s2) / count(s2));
}

double se_dvar(const Sample& s1, const Sample& s2, double rho) {
    return std::sqrt(moment_summary(s1).centered_squares_var / count(s1) +
                     rho * rho * moment_summary(s2).centered_squares_var / count(s2));
}

double se_rmean(const Sample& s1, const Sample& s2) {
    const double m1 = mean(s1);
    const double m2 = mean(s2);
    require_nonzero_denominator(m2, s2, "mean of the second sample");
    const double ratio = m1 / m2;
    return std::sqrt(var_unbiased(s1) / count(s1) +
                     ratio * ratio * var_unbiased(s2) / count(s2)) /
           std::abs(m2);
}

double se_rvar(const Sample& s1, const Sample& s2) {
    const MomentSummary a = moment_summary(s1);
    const MomentSummary b = moment_summary(s2);
    require_nonzero_denominator(b.var, s2, "variance of the second sample");
    const double ratio = a.var / b.var;
    return std::sqrt(a.centered_squares_var / count(s1) +
                     ratio * ratio * b.centered_squares_var / count(s2)) /
           b.var;
}

void require_nonzero_denominator(double denominator, const Sample& s, const char* what) {
    if (std::abs(denominator) < kNearZeroRelTol * s.scale()) {
        throw NearZeroDenominator(std::string(what) + " is numerically zero");
    }
}

}  // namespace asymptest
