#include "gegen/gengeg.hpp"

#include <cmath>
#include <string>

#include "gegen/errors.hpp"
#include "gegen/quadrature.hpp"
#include "gegen/special.hpp"

namespace gegen {

namespace {

void require_in_segment(double t) {
  if (!(t >= -1.0 && t <= 1.0)) {
    throw domain_error("evaluation point must lie in [-1, 1], got " + std::to_string(t));
  }
}

double quadratic_argument(double t) { return 2.0 * t * t - 1.0; }

double composite(const JacobiParams& inner, std::uint64_t n, double t) {
  const double p = jacobi_value(inner, n / 2, quadratic_argument(t));
  return (n % 2 == 0) ? p : t * p;
}

}  // namespace

GegenParams::GegenParams(double lambda, double mu) : lambda_(lambda), mu_(mu) {
  if (!std::isfinite(lambda) || !std::isfinite(mu) || !(lambda > -0.5) || !(mu >= 0.0)) {
    throw domain_error("generalized Gegenbauer parameters require lambda > -1/2 and "
                       "mu >= 0, got (" +
                       std::to_string(lambda) + ", " + std::to_string(mu) + ")");
  }
}

JacobiParams GegenParams::inner_jacobi(std::uint64_t n) const {
  return (n % 2 == 0) ? JacobiParams(lambda_ - 0.5, mu_ - 0.5)
                      : JacobiParams(lambda_ - 0.5, mu_ + 0.5);
}

double plain_coefficient(const GegenParams& params, std::uint64_t n) {
  const std::uint64_t k = (n % 2 == 0) ? n / 2 : n / 2 + 1;
  return pochhammer_ratio(params.lambda() + params.mu(), params.mu() + 0.5, k);
}

OrthonormalCoefficient orthonormal_coefficient(const GegenParams& params,
                                               std::uint64_t n) {
  const double lam = params.lambda();
  const double mu = params.mu();
  const double s = lam + mu;
  const double k = static_cast<double>(n / 2);
  double log_square = 0.0;
  if (n % 2 == 0) {
    // (2k + s) Gamma(k + s) collapses to Gamma(s + 1) at k = 0.
    const double head = (n == 0) ? log_gamma(PositiveReal(s + 1.0))
                                 : std::log(2.0 * k + s) + log_gamma(PositiveReal(k + s));
    log_square = head + log_gamma(PositiveReal(k + 1.0)) -
                 log_gamma(PositiveReal(k + lam + 0.5)) -
                 log_gamma(PositiveReal(k + mu + 0.5));
  } else {
    log_square = std::log(2.0 * k + s + 1.0) + log_gamma(PositiveReal(k + 1.0)) +
                 log_gamma(PositiveReal(k + s + 1.0)) -
                 log_gamma(PositiveReal(k + lam + 0.5)) -
                 log_gamma(PositiveReal(k + mu + 1.5));
  }
  return {n, std::exp(0.5 * log_square)};
}

double gengeg_eval(const GegenParams& params, std::uint64_t n, double t) {
  require_in_segment(t);
  return plain_coefficient(params, n) * composite(params.inner_jacobi(n), n, t);
}

double gengeg_orthonormal_eval(const GegenParams& params, std::uint64_t n, double t) {
  require_in_segment(t);
  return orthonormal_coefficient(params, n).value * composite(params.inner_jacobi(n), n, t);
}

double gegenbauer_eval(double lambda, std::uint64_t n, double t) {
  if (!(lambda > -0.5)) {
    throw domain_error("Gegenbauer parameter requires lambda > -1/2");
  }
  const JacobiParams symmetric(lambda - 0.5, lambda - 0.5);
  return pochhammer_ratio(2.0 * lambda, lambda + 0.5, n) * jacobi_value(symmetric, n, t);
}

double gengeg_weight(const GegenParams& params, double t) {
  require_in_segment(t);
  const double exponent = params.lambda() - 0.5;
  if (std::abs(t) == 1.0 && exponent < 0.0) {
    throw domain_error("generalized Gegenbauer weight has a pole at t = " +
                       std::to_string(t) + " for lambda < 1/2");
  }
  return std::pow(std::abs(t), 2.0 * params.mu()) * std::pow(1.0 - t * t, exponent);
}

double connection_eval(const GegenParams& params, std::uint64_t n, double t,
                       std::uint64_t m) {
  const double mu = params.mu();
  if (!(mu > 0.0)) {
    throw domain_error("connection formula requires mu > 0");
  }
  if (m < n / 2 + 8) {
    throw domain_error("connection_eval needs at least n/2 + 8 = " +
                       std::to_string(n / 2 + 8) + " quadrature points, got " +
                       std::to_string(m));
  }
  require_in_segment(t);
  const double shifted = params.lambda() + mu;
  const auto rule = cached_gauss_jacobi_rule(JacobiParams(mu - 1.0, mu - 1.0), m);
  const double integral = integrate(*rule, [&](double x) {
    return gegenbauer_eval(shifted, n, t * x) * (1.0 + x);
  });
  return integral * std::exp(-log_beta(0.5, mu));
}

double connection_eval(const GegenParams& params, std::uint64_t n, double t) {
  return connection_eval(params, n, t, n / 2 + 8);
}

OrthonormalGengeg::OrthonormalGengeg(const GegenParams& params, std::uint64_t n)
    : n_(n), inner_(params.inner_jacobi(n)),
      coefficient_(orthonormal_coefficient(params, n).value) {}

double OrthonormalGengeg::operator()(double t) const {
  return coefficient_ * composite(inner_, n_, t);
}

}  // namespace gegen
