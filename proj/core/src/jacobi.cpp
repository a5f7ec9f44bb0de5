#include "gegen/jacobi.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gegen/errors.hpp"
#include "gegen/special.hpp"

namespace gegen {

namespace {

void require_in_segment(double t) {
  if (!(t >= -1.0 && t <= 1.0)) {
    throw domain_error("Jacobi evaluation point must lie in [-1, 1], got " +
                       std::to_string(t));
  }
}

// Advances (P_{k-1}, P_{k-2}) to P_k. Valid for k >= 2. Integer parts are
// formed before adding alpha or beta so factors like (k - 1) + alpha keep full
// relative precision as alpha -> -1.
inline double recurrence_step(double a, double b, double k, double t,
                              double p1, double p0) {
  const double ab = a + b;
  const double s = 2.0 * k + ab;
  const double s_minus_2 = 2.0 * (k - 1.0) + ab;
  const double denom = 2.0 * k * (k + ab) * s_minus_2;
  const double c1 = (s - 1.0) * (s * s_minus_2 * t + (a - b) * ab);
  const double c0 = -2.0 * ((k - 1.0) + a) * ((k - 1.0) + b) * s;
  return (c1 * p1 + c0 * p0) / denom;
}

inline double degree_one(double a, double b, double t) {
  return (a + 1.0) + (a + b + 2.0) * (t - 1.0) / 2.0;
}

}  // namespace

JacobiParams::JacobiParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !(alpha > -1.0) ||
      !(beta > -1.0)) {
    throw domain_error("Jacobi parameters require alpha > -1 and beta > -1, got (" +
                       std::to_string(alpha) + ", " + std::to_string(beta) + ")");
  }
}

EvalSequence::EvalSequence(JacobiParams params, double point, std::vector<double> values)
    : params_(params), point_(point), values_(std::move(values)) {
  if (values_.empty()) throw domain_error("EvalSequence must hold at least P_0");
}

EvalSequence jacobi_eval(const JacobiParams& params, std::uint64_t n_max, double t) {
  require_in_segment(t);
  const double a = params.alpha();
  const double b = params.beta();
  std::vector<double> values(n_max + 1);
  values[0] = 1.0;
  if (n_max >= 1) values[1] = degree_one(a, b, t);
  for (std::uint64_t k = 2; k <= n_max; ++k) {
    values[k] = recurrence_step(a, b, static_cast<double>(k), t, values[k - 1],
                                values[k - 2]);
  }
  return EvalSequence(params, t, std::move(values));
}

std::pair<double, double> jacobi_value_pair(const JacobiParams& params,
                                            std::uint64_t n, double t) {
  require_in_segment(t);
  if (n == 0) return {1.0, 0.0};
  const double a = params.alpha();
  const double b = params.beta();
  double p0 = 1.0;
  double p1 = degree_one(a, b, t);
  for (std::uint64_t k = 2; k <= n; ++k) {
    const double next = recurrence_step(a, b, static_cast<double>(k), t, p1, p0);
    p0 = p1;
    p1 = next;
  }
  return {p1, p0};
}

double jacobi_value(const JacobiParams& params, std::uint64_t n, double t) {
  return jacobi_value_pair(params, n, t).first;
}

EndpointValues jacobi_endpoint_values(const JacobiParams& params, std::uint64_t n) {
  return {rising_over_factorial(params.alpha() + 1.0, n),
          rising_over_factorial(params.beta() + 1.0, n)};
}

double jacobi_zeroth_moment(const JacobiParams& params) {
  const double a = params.alpha();
  const double b = params.beta();
  return std::exp((a + b + 1.0) * std::numbers::ln2 + log_beta(a + 1.0, b + 1.0));
}

double jacobi_norm_squared(const JacobiParams& params, std::uint64_t n) {
  // h_0 through the Beta form: the displayed Gamma(n+a+b+1) has a pole at
  // n = 0 when a + b = -1.
  if (n == 0) return jacobi_zeroth_moment(params);
  const double a = params.alpha();
  const double b = params.beta();
  const double nd = static_cast<double>(n);
  const double log_h = (a + b + 1.0) * std::numbers::ln2 +
                       log_gamma(PositiveReal(nd + a + 1.0)) +
                       log_gamma(PositiveReal(nd + b + 1.0)) -
                       std::log(2.0 * nd + a + b + 1.0) -
                       log_gamma(PositiveReal(nd + 1.0)) -
                       log_gamma(PositiveReal(nd + a + b + 1.0));
  return std::exp(log_h);
}

double jacobi_weight(const JacobiParams& params, double t) {
  require_in_segment(t);
  const double a = params.alpha();
  const double b = params.beta();
  if ((t == 1.0 && a < 0.0) || (t == -1.0 && b < 0.0)) {
    throw domain_error("Jacobi weight has a pole at t = " + std::to_string(t));
  }
  return std::pow(1.0 - t, a) * std::pow(1.0 + t, b);
}

}  // namespace gegen
