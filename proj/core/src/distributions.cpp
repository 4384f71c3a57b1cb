#include "asymptest/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "asymptest/error.hpp"
#include "asymptest/special_functions.hpp"
#include "root_finding.hpp"

namespace asymptest {

namespace {

void require_df(double df, const char* who) {
    if (!(df > 0.0) || std::isinf(df)) {
        throw DomainError(std::string(who) + ": degrees of freedom must be positive and finite");
    }
}

void require_point(double x, const char* who) {
    if (std::isnan(x)) throw DomainError(std::string(who) + ": argument is NaN");
}

void require_probability(double p, const char* who) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError(std::string(who) + ": probability must lie strictly inside (0, 1)");
    }
}

// Wichura, AS 241 (PPND16), ~1e-16 relative.
double normal_quantile_as241(double p) {
    const double q = p - 0.5;
    if (std::abs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                     6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
                   1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
                 1.3314166789178437745e+2) * r + 3.3871328727963666080e+0) /
               (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                     3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
                   5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
                 4.2313330701600911252e+1) * r + 1.0);
    }
    double r = q < 0.0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double value;
    if (r <= 5.0) {
        r -= 1.6;
        value = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                      2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
                    3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
                  4.63033784615654529590e+0) * r + 1.42343711074968357734e+0) /
                (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                      1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                    6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
                  2.05319162663775882187e+0) * r + 1.0);
    } else {
        r -= 5.0;
        value = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                      1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                    2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
                  5.46378491116411436990e+0) * r + 6.65790464350110377720e+0) /
                (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                      1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                    1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
                  5.99832206555887937690e-1) * r + 1.0);
    }
    return q < 0.0 ? -value : value;
}

double std_normal_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double chi2_pdf(double x, double df) {
    if (x <= 0.0) return 0.0;
    return std::exp(special::log_gamma_kernel(0.5 * df, 0.5 * x)) / x;
}

double f_pdf(double x, double df1, double df2) {
    if (x <= 0.0) return 0.0;
    const double denom = df1 * x + df2;
    const double w = df1 * x / denom;
    const double y = df2 / denom;
    const double a = 0.5 * df1;
    const double b = 0.5 * df2;
    return std::exp(a * std::log(w) + b * std::log(y) - special::log_beta(a, b) - std::log(x));
}

// Shared quantile driver for distributions on (0, inf): solves on the lower
// tail for p <= 1/2 and on the upper tail otherwise.
template <class Cdf, class Sf, class Pdf>
double positive_quantile(double p, double guess, Cdf cdf, Sf sf, Pdf pdf) {
    double hi = std::max(guess, 1.0) * 2.0;
    while (cdf(hi) < p && std::isfinite(hi)) hi *= 2.0;
    if (p <= 0.5) {
        return detail::bracketed_newton(
            [&](double x) { return std::pair{cdf(x) - p, pdf(x)}; }, 0.0, hi, guess);
    }
    const double upper = 1.0 - p;
    return detail::bracketed_newton(
        [&](double x) { return std::pair{upper - sf(x), pdf(x)}; }, 0.0, hi, guess);
}

}  // namespace

double std_normal_cdf(double x) {
    require_point(x, "std_normal_cdf");
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double std_normal_sf(double x) {
    require_point(x, "std_normal_sf");
    return 0.5 * std::erfc(x / std::numbers::sqrt2);
}

double std_normal_quantile(double p) {
    require_probability(p, "std_normal_quantile");
    double x = normal_quantile_as241(p);
    // One Newton polish step on the tail that holds the relative precision.
    const double density = std_normal_pdf(x);
    if (density > 0.0) {
        if (p <= 0.5) {
            x -= (std_normal_cdf(x) - p) / density;
        } else {
            x += (std_normal_sf(x) - (1.0 - p)) / density;
        }
    }
    return x;
}

double chi2_cdf(double x, double df) {
    require_df(df, "chi2_cdf");
    require_point(x, "chi2_cdf");
    if (x <= 0.0) return 0.0;
    return special::gamma_p(0.5 * df, 0.5 * x);
}

double chi2_sf(double x, double df) {
    require_df(df, "chi2_sf");
    require_point(x, "chi2_sf");
    if (x <= 0.0) return 1.0;
    return special::gamma_q(0.5 * df, 0.5 * x);
}

double chi2_quantile(double p, double df) {
    require_df(df, "chi2_quantile");
    require_probability(p, "chi2_quantile");
    // Wilson-Hilferty starting point.
    const double h = 2.0 / (9.0 * df);
    const double c = 1.0 - h + std_normal_quantile(p) * std::sqrt(h);
    double guess = df * c * c * c;
    if (!(guess > 0.0)) guess = 0.5 * df;
    return positive_quantile(
        p, guess, [df](double x) { return chi2_cdf(x, df); },
        [df](double x) { return chi2_sf(x, df); }, [df](double x) { return chi2_pdf(x, df); });
}

double f_cdf(double x, double df1, double df2) {
    require_df(df1, "f_cdf");
    require_df(df2, "f_cdf");
    require_point(x, "f_cdf");
    if (x <= 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    const double denom = df1 * x + df2;
    return special::regularized_beta(df1 * x / denom, df2 / denom, 0.5 * df1, 0.5 * df2).lower;
}

double f_sf(double x, double df1, double df2) {
    require_df(df1, "f_sf");
    require_df(df2, "f_sf");
    require_point(x, "f_sf");
    if (x <= 0.0) return 1.0;
    if (std::isinf(x)) return 0.0;
    const double denom = df1 * x + df2;
    return special::regularized_beta(df1 * x / denom, df2 / denom, 0.5 * df1, 0.5 * df2).upper;
}

double f_quantile(double p, double df1, double df2) {
    require_df(df1, "f_quantile");
    require_df(df2, "f_quantile");
    require_probability(p, "f_quantile");
    return positive_quantile(
        p, 1.0, [=](double x) { return f_cdf(x, df1, df2); },
        [=](double x) { return f_sf(x, df1, df2); }, [=](double x) { return f_pdf(x, df1, df2); });
}

double chi2_cr_cdf(double x, double df) {
    require_df(df, "chi2_cr_cdf");
    require_point(x, "chi2_cr_cdf");
    return chi2_cdf(x * std::sqrt(2.0 * df) + df, df);
}

double chi2_cr_quantile(double p, double df) {
    return (chi2_quantile(p, df) - df) / std::sqrt(2.0 * df);
}

double f_cr_scale(double df1, double df2) {
    require_df(df1, "f_cr");
    require_df(df2, "f_cr");
    return std::sqrt(2.0 / (df1 + 1.0) + 2.0 / (df2 + 1.0));
}

double f_cr_cdf(double x, double df1, double df2) {
    require_point(x, "f_cr_cdf");
    return f_cdf(x * f_cr_scale(df1, df2) + 1.0, df1, df2);
}

double f_cr_quantile(double p, double df1, double df2) {
    const double scale = f_cr_scale(df1, df2);
    return (f_quantile(p, df1, df2) - 1.0) / scale;
}

std::string_view to_string(Family family) {
    switch (family) {
        case Family::Normal: return "normal";
        case Family::Chi2: return "chi2";
        case Family::F: return "f";
        case Family::Chi2Cr: return "chi2cr";
        case Family::FCr: return "fcr";
    }
    return "unknown";
}

double evaluate_cdf(const DistributionQuery& q) {
    switch (q.family) {
        case Family::Normal: return std_normal_cdf(q.point_or_prob);
        case Family::Chi2: return chi2_cdf(q.point_or_prob, q.df1);
        case Family::F: return f_cdf(q.point_or_prob, q.df1, q.df2);
        case Family::Chi2Cr: return chi2_cr_cdf(q.point_or_prob, q.df1);
        case Family::FCr: return f_cr_cdf(q.point_or_prob, q.df1, q.df2);
    }
    throw DomainError("unknown distribution family");
}

double evaluate_quantile(const DistributionQuery& q) {
    switch (q.family) {
        case Family::Normal: return std_normal_quantile(q.point_or_prob);
        case Family::Chi2: return chi2_quantile(q.point_or_prob, q.df1);
        case Family::F: return f_quantile(q.point_or_prob, q.df1, q.df2);
        case Family::Chi2Cr: return chi2_cr_quantile(q.point_or_prob, q.df1);
        case Family::FCr: return f_cr_quantile(q.point_or_prob, q.df1, q.df2);
    }
    throw DomainError("unknown distribution family");
}

}  // namespace asymptest
