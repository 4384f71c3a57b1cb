#pragma once

namespace asymptest::special {

/// Lower and upper regularized tails, each computed without subtracting
/// from one so that both stay accurate deep in their own tail.
struct Tails {
    double lower;
    double upper;
};

/// log Gamma(x) for x > 0 (Lanczos approximation, ~1e-15 relative).
/// Reentrant, unlike std::lgamma which may write the global signgam.
[[nodiscard]] double log_gamma(double x);

/// log B(a, b) for a, b > 0.
[[nodiscard]] double log_beta(double a, double b);

/// Regularized incomplete gamma P(a, x) and Q(a, x) = 1 - P(a, x).
///
/// Power series for x < a + 1, Lentz continued fraction otherwise.
/// Throws DomainError for a <= 0, x < 0 or NaN.
[[nodiscard]] Tails regularized_gamma(double a, double x);

[[nodiscard]] inline double gamma_p(double a, double x) { return regularized_gamma(a, x).lower; }
[[nodiscard]] inline double gamma_q(double a, double x) { return regularized_gamma(a, x).upper; }

/// Regularized incomplete beta I_x(a, b) and its complement.
///
/// Continued fraction, evaluated on whichever side of the mean
/// a / (a + b) converges fastest. Throws DomainError for a, b <= 0 or
/// x outside [0, 1].
[[nodiscard]] Tails regularized_beta(double x, double a, double b);

/// Same as above with the caller supplying y = 1 - x, which avoids the
/// rounding of 1 - x when x is close to 1.
[[nodiscard]] Tails regularized_beta(double x, double y, double a, double b);

[[nodiscard]] inline double beta_i(double x, double a, double b) {
    return regularized_beta(x, a, b).lower;
}

/// log of x^a e^-x / Gamma(a), evaluated through Stirling's series so that
/// large shape parameters do not lose precision to cancellation.
[[nodiscard]] double log_gamma_kernel(double a, double x);

}  // namespace asymptest::special
