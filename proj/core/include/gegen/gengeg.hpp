#pragma once

// Generalized Gegenbauer polynomials C_n^{(lambda,mu)}, orthogonal on [-1, 1]
// against |t|^{2 mu} (1 - t^2)^{lambda - 1/2}, and their orthonormal
// rescaling. Both are built from a Jacobi polynomial of degree floor(n/2)
// evaluated at u = 2 t^2 - 1:
//
//   C_{2k}(t)   = a_{2k}   P_k^{(lambda-1/2, mu-1/2)}(u)
//   C_{2k+1}(t) = a_{2k+1} t P_k^{(lambda-1/2, mu+1/2)}(u)
//
// mu = 0 gives the classical Gegenbauer polynomials C_n^lambda.

#include <cstdint>

#include "gegen/jacobi.hpp"

namespace gegen {

/// lambda > -1/2, mu >= 0, both finite.
class GegenParams {
 public:
  GegenParams(double lambda, double mu);

  double lambda() const noexcept { return lambda_; }
  double mu() const noexcept { return mu_; }

  /// Jacobi family carrying the polynomial part of index n.
  JacobiParams inner_jacobi(std::uint64_t n) const;

  friend bool operator==(const GegenParams&, const GegenParams&) = default;

 private:
  double lambda_;
  double mu_;
};

struct OrthonormalCoefficient {
  std::uint64_t n;
  double value;
};

/// a_n^{(lambda,mu)}: (lambda+mu)_k / (mu+1/2)_k with k = n/2 for even n and
/// k = (n+1)/2 for odd n.
double plain_coefficient(const GegenParams& params, std::uint64_t n);

/// Orthonormalizing coefficient, computed in log space from four gamma
/// factors. Finite and positive for any n representable as a double.
OrthonormalCoefficient orthonormal_coefficient(const GegenParams& params,
                                               std::uint64_t n);

double gengeg_eval(const GegenParams& params, std::uint64_t n, double t);
double gengeg_orthonormal_eval(const GegenParams& params, std::uint64_t n, double t);

/// Classical Gegenbauer C_n^lambda(t) through the symmetric Jacobi family:
/// (2 lambda)_n / (lambda+1/2)_n P_n^{(lambda-1/2, lambda-1/2)}(t).
double gegenbauer_eval(double lambda, std::uint64_t n, double t);

/// v(t) = |t|^{2 mu} (1 - t^2)^{lambda - 1/2}; t = +-1 is a pole for lambda < 1/2.
double gengeg_weight(const GegenParams& params, double t);

/// Connection integral
///   c_mu * integral_{-1}^{1} C_n^{lambda+mu}(t x) (1 + x) (1 - x^2)^{mu-1} dx,
/// with (1 - x^2)^{mu-1} absorbed into an m-point Gauss-Jacobi rule and
/// 1 / c_mu = B(1/2, mu). Requires mu > 0 and m >= n/2 + 8.
double connection_eval(const GegenParams& params, std::uint64_t n, double t,
                       std::uint64_t m);
double connection_eval(const GegenParams& params, std::uint64_t n, double t);

/// C~_n^{(lambda,mu)} with its coefficient precomputed, for repeated
/// evaluation in sup-norm searches.
class OrthonormalGengeg {
 public:
  OrthonormalGengeg(const GegenParams& params, std::uint64_t n);

  double operator()(double t) const;

  std::uint64_t degree() const noexcept { return n_; }
  double coefficient() const noexcept { return coefficient_; }

 private:
  std::uint64_t n_;
  JacobiParams inner_;
  double coefficient_;
};

}  // namespace gegen
