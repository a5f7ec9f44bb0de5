#pragma once

// Maxima of |f| on [-1, 1] and of weighted |P_n(cos theta)| on theta
// intervals. Sampling is uniform in theta (Chebyshev-distributed in t),
// followed by golden-section refinement of the best sampled local maxima.

#include <cstdint>
#include <functional>
#include <optional>

#include "gegen/jacobi.hpp"

namespace gegen {

struct SupNormEstimate {
  double value = 0.0;
  double argmax_t = 1.0;
  std::optional<double> argmax_theta;
  std::uint64_t grid_points = 0;
  bool refined = false;
};

struct SupNormOptions {
  std::uint64_t grid_points = 0;  // 0 selects max(4096, 32 (degree + 1))
  std::size_t candidates = 8;
  double theta_tolerance = 1e-12;
  bool refine = true;
};

/// Sub-interval [lo, hi] of [0, pi] with lo < hi.
class ThetaInterval {
 public:
  ThetaInterval(double lo, double hi);
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double length() const noexcept { return hi_ - lo_; }

 private:
  double lo_;
  double hi_;
};

enum class WeightKind { none, sin_half_theta, theta_power };

std::uint64_t default_grid_points(std::uint64_t degree);

/// max over t in [-1, 1] of |f(t)|. Accurate to ~1e-12 relative for
/// polynomials up to degree_hint with the default grid.
SupNormEstimate sup_norm(const std::function<double(double)>& f, std::uint64_t degree_hint,
                         const SupNormOptions& options = {});

/// ||P_n^{(alpha,beta)}||_inf. When max(alpha, beta) >= -1/2 the value is the
/// endpoint closed form (at t = 1 if alpha >= beta, else at t = -1); the grid
/// search always runs and must agree to 1e-9 relative, otherwise
/// gegen::computation_error is thrown.
SupNormEstimate jacobi_sup_norm(const JacobiParams& params, std::uint64_t n);

struct ThetaMaxEstimate {
  double value = 0.0;
  double argmax_theta = 0.0;
  std::uint64_t grid_points = 0;
};

/// max over theta in the interval of weight(theta) |P_n(cos theta)|, with
/// weight 1, sin(theta/2) or theta^{alpha+1/2}. The sample count is the
/// default grid scaled to the interval length, at least 256.
ThetaMaxEstimate weighted_theta_argmax(const JacobiParams& params, std::uint64_t n,
                                       const ThetaInterval& interval, WeightKind kind,
                                       const SupNormOptions& options = {});

double weighted_theta_max(const JacobiParams& params, std::uint64_t n,
                          const ThetaInterval& interval, WeightKind kind,
                          const SupNormOptions& options = {});

/// |P_n(cos(1/n))|; requires n >= 1 and alpha > -1/2.
double special_point_value(const JacobiParams& params, std::uint64_t n);

}  // namespace gegen
