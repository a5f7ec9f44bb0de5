#pragma once

// Jacobi polynomials P_n^{(alpha,beta)} on [-1, 1]: three-term recurrence
// evaluation, closed-form endpoint values, squared norms and the weight
// (1 - t)^alpha (1 + t)^beta.

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace gegen {

/// Parameter pair of a Jacobi family. Both exponents must be finite and > -1.
class JacobiParams {
 public:
  JacobiParams(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  /// The family with alpha and beta exchanged, i.e. P_n^{(beta,alpha)}.
  JacobiParams swapped() const noexcept { return JacobiParams(beta_, alpha_, 0); }

  friend bool operator==(const JacobiParams&, const JacobiParams&) = default;

 private:
  JacobiParams(double alpha, double beta, int /*unchecked*/) noexcept
      : alpha_(alpha), beta_(beta) {}
  double alpha_;
  double beta_;
};

/// Values P_0(t), ..., P_{n_max}(t) of one family at one point.
class EvalSequence {
 public:
  EvalSequence(JacobiParams params, double point, std::vector<double> values);

  const JacobiParams& params() const noexcept { return params_; }
  double point() const noexcept { return point_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t n_max() const noexcept { return values_.size() - 1; }
  double operator[](std::size_t n) const { return values_.at(n); }

 private:
  JacobiParams params_;
  double point_;
  std::vector<double> values_;
};

/// P_0(t) .. P_{n_max}(t) by forward recurrence. t must lie in [-1, 1].
EvalSequence jacobi_eval(const JacobiParams& params, std::uint64_t n_max, double t);

/// P_n(t) alone; same recurrence, no allocation.
double jacobi_value(const JacobiParams& params, std::uint64_t n, double t);

/// (P_n(t), P_{n-1}(t)); the second entry is 0 for n = 0.
std::pair<double, double> jacobi_value_pair(const JacobiParams& params,
                                            std::uint64_t n, double t);

struct EndpointValues {
  double at_plus_one;       // P_n(1) = (alpha+1)_n / n!
  double abs_at_minus_one;  // |P_n(-1)| = (beta+1)_n / n!
};

EndpointValues jacobi_endpoint_values(const JacobiParams& params, std::uint64_t n);

/// h_n = integral of P_n^2 (1-t)^alpha (1+t)^beta over [-1, 1].
double jacobi_norm_squared(const JacobiParams& params, std::uint64_t n);

/// w(t) = (1-t)^alpha (1+t)^beta. An endpoint with a negative exponent is a
/// pole and raises gegen::domain_error.
double jacobi_weight(const JacobiParams& params, double t);

/// 2^{alpha+beta+1} B(alpha+1, beta+1), the integral of the weight.
double jacobi_zeroth_moment(const JacobiParams& params);

}  // namespace gegen
