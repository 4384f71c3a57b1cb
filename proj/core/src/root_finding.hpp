#pragma once

#include <cmath>
#include <utility>

namespace asymptest::detail {

/// Root of an increasing function on [lo, hi] with g(lo) <= 0 <= g(hi).
///
/// `value_and_slope(x)` returns {g(x), g'(x)}. Newton steps are taken while
/// they stay strictly inside the current bracket; otherwise the bracket is
/// bisected. Stops once the step or the bracket is below `rel_tol * |x|`.
template <class Fn>
double bracketed_newton(Fn&& value_and_slope, double lo, double hi, double x,
                        double rel_tol = 1e-15, int max_iter = 2000) {
    if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
    for (int i = 0; i < max_iter; ++i) {
        const auto [g, slope] = value_and_slope(x);
        if (g == 0.0) return x;
        if (g < 0.0) {
            lo = x;
        } else {
            hi = x;
        }
        double next = x - g / slope;
        if (!(slope > 0.0) || !std::isfinite(next) || !(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        const double tol = rel_tol * std::abs(next) + 1e-300;
        if (std::abs(next - x) <= tol || hi - lo <= tol) return next;
        x = next;
    }
    return x;
}

}  // namespace asymptest::detail
