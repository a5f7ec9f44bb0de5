#include "gegen/special.hpp"

#include <cmath>
#include <string>

#include "gegen/errors.hpp"

namespace gegen {

namespace {

// std::lgamma may write the global signgam; glibc's reentrant variant
// keeps these kernels free of shared state.
double lgamma_positive(double x) {
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

double checked_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw overflow_error(std::string(what) + ": result is not representable");
  }
  return value;
}

}  // namespace

PositiveReal::PositiveReal(double value) : value_(value) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw domain_error("expected a finite positive real, got " +
                       std::to_string(value));
  }
}

double log_gamma(PositiveReal x) { return lgamma_positive(x.value()); }

double log_beta(double a, double b) {
  return log_gamma(PositiveReal(a)) + log_gamma(PositiveReal(b)) -
         log_gamma(PositiveReal(a + b));
}

double pochhammer(double q, std::uint64_t n) {
  if (!std::isfinite(q)) throw domain_error("pochhammer: q must be finite");
  if (n == 0) return 1.0;
  if (n <= kPochhammerDirectLimit || q <= 0.0) {
    double product = 1.0;
    for (std::uint64_t i = 0; i < n; ++i) {
      product *= q + static_cast<double>(i);
      if (product == 0.0) return 0.0;
    }
    return checked_finite(product, "pochhammer");
  }
  const double log_value =
      log_gamma(PositiveReal(q + static_cast<double>(n))) -
      log_gamma(PositiveReal(q));
  return checked_finite(std::exp(log_value), "pochhammer");
}

double gamma_ratio(double a, double b, std::uint64_t n) {
  const double nd = static_cast<double>(n);
  if (!(nd + a > 0.0) || !(nd + b > 0.0)) {
    throw domain_error("gamma_ratio: requires n + a > 0 and n + b > 0");
  }
  if (a == b) return 1.0;
  const double log_value =
      log_gamma(PositiveReal(nd + a)) - log_gamma(PositiveReal(nd + b));
  return checked_finite(std::exp(log_value), "gamma_ratio");
}

double pochhammer_ratio(double a, double b, std::uint64_t n) {
  if (!(a > -1.0) || !(b > 0.0)) {
    throw domain_error("pochhammer_ratio: requires a > -1 and b > 0");
  }
  if (n == 0) return 1.0;
  if (n <= kPochhammerDirectLimit) {
    double product = 1.0;
    for (std::uint64_t i = 0; i < n; ++i) {
      const double k = static_cast<double>(i);
      product *= (a + k) / (b + k);
    }
    return product;
  }
  if (a == 0.0) return 0.0;
  // (a)_n = a (a+1)_{n-1} moves a non-positive first factor out of log space.
  if (a < 0.0) return (a / b) * pochhammer_ratio(a + 1.0, b + 1.0, n - 1);
  const double nd = static_cast<double>(n);
  const double log_value =
      log_gamma(PositiveReal(a + nd)) - log_gamma(PositiveReal(a)) -
      log_gamma(PositiveReal(b + nd)) + log_gamma(PositiveReal(b));
  return checked_finite(std::exp(log_value), "pochhammer_ratio");
}

double rising_over_factorial(double q, std::uint64_t n) {
  return pochhammer_ratio(q, 1.0, n);
}

}  // namespace gegen
