#pragma once

// Gauss-Jacobi rules and integrals against Jacobi and generalized
// Gegenbauer weights.

#include <cmath>
#include <concepts>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gegen/errors.hpp"
#include "gegen/gengeg.hpp"
#include "gegen/jacobi.hpp"

namespace gegen {

/// m-point Gauss-Jacobi rule: nodes strictly increasing in (-1, 1), weights
/// positive. Immutable once built.
class QuadratureRule {
 public:
  QuadratureRule(JacobiParams params, std::vector<double> nodes, std::vector<double> weights);

  const JacobiParams& params() const noexcept { return params_; }
  std::span<const double> nodes() const noexcept { return nodes_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return nodes_.size(); }

 private:
  JacobiParams params_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Rule exact for polynomials of degree <= 2m - 1 against the Jacobi weight.
/// Nodes come from Newton iteration on P_m; bracketing plus bisection takes
/// over if Newton fails. Throws gegen::computation_error if no root set with
/// m distinct nodes can be found.
QuadratureRule gauss_jacobi_rule(const JacobiParams& params, std::uint64_t m);

/// Same rule, shared through a process-wide cache keyed by (alpha, beta, m).
/// Thread-safe.
std::shared_ptr<const QuadratureRule> cached_gauss_jacobi_rule(const JacobiParams& params,
                                                               std::uint64_t m);

namespace detail {
/// Root finding by sign-change bracketing only; exposed for testing the
/// fallback path.
QuadratureRule gauss_jacobi_rule_bracketed(const JacobiParams& params, std::uint64_t m);
}  // namespace detail

/// sum_i w_i f(x_i), compensated. Non-finite f(x_i) is a computation error.
template <typename F>
  requires std::invocable<F&, double>
double integrate(const QuadratureRule& rule, F&& f) {
  const auto nodes = rule.nodes();
  const auto weights = rule.weights();
  double sum = 0.0;
  double compensation = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double value = static_cast<double>(f(nodes[i]));
    if (!std::isfinite(value)) {
      throw computation_error("integrand is not finite at node " + std::to_string(nodes[i]));
    }
    const double term = weights[i] * value;
    const double next = sum + term;
    compensation += (std::abs(sum) >= std::abs(term)) ? (sum - next) + term
                                                      : (term - next) + sum;
    sum = next;
  }
  return sum + compensation;
}

/// Dense row-major matrix, just enough for Gram matrices.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// G(i, j) = integral of C~_i C~_j v over [-1, 1] for i, j <= n_max.
///
/// Mixed-parity entries are exactly zero. Same-parity entries are mapped by
/// u = 2t^2 - 1 to Gauss-Jacobi integrals with exponents
/// (lambda-1/2, mu-1/2) for even pairs and (lambda-1/2, mu+1/2) for odd
/// pairs, so the singular weight v is never sampled. Requires m >= n_max + 8.
Matrix gram_matrix_orthonormal(const GegenParams& params, std::uint64_t n_max,
                               std::uint64_t m);

/// integral over [-1, 1] of g(t^2) v(t) dt
///   = 2^{-(lambda+mu)} integral g((1+u)/2) (1-u)^{lambda-1/2} (1+u)^{mu-1/2} du,
/// evaluated with an m-point rule. g receives s = t^2 in [0, 1].
double integrate_even_gengeg(const GegenParams& params, std::uint64_t m,
                             const std::function<double(double)>& g);

}  // namespace gegen
