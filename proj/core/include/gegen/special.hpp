#pragma once

// Scalar kernels shared by every coefficient formula: log-gamma, rising
// factorials and gamma-function ratios. All functions are pure.

#include <cstdint>

namespace gegen {

/// Strictly positive, finite real. Throws gegen::domain_error otherwise.
class PositiveReal {
 public:
  explicit PositiveReal(double value);
  double value() const noexcept { return value_; }
  operator double() const noexcept { return value_; }

 private:
  double value_;
};

/// ln Gamma(x) for x > 0.
double log_gamma(PositiveReal x);

/// ln B(a, b) = ln Gamma(a) + ln Gamma(b) - ln Gamma(a + b), a, b > 0.
double log_beta(double a, double b);

/// Rising factorial (q)_n = q (q+1) ... (q+n-1), (q)_0 = 1.
///
/// Direct product for n <= 64, log-gamma difference for larger n when q > 0.
/// Throws gegen::overflow_error if the result is not finite.
double pochhammer(double q, std::uint64_t n);

/// Gamma(n + a) / Gamma(n + b), evaluated as a difference of log-gammas.
double gamma_ratio(double a, double b, std::uint64_t n);

/// (a)_n / (b)_n for a > -1, b > 0. Never overflows for moderate n since
/// large n goes through log space; a in (-1, 0] is handled by factoring out
/// the first term.
double pochhammer_ratio(double a, double b, std::uint64_t n);

/// (q)_n / n! for q > -1, the Jacobi endpoint value P_n^{(q-1, .)}(1).
double rising_over_factorial(double q, std::uint64_t n);

inline constexpr std::uint64_t kPochhammerDirectLimit = 64;

}  // namespace gegen
