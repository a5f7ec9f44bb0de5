#include "gegen/extrema.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "gegen/errors.hpp"

namespace gegen {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvGolden = 0.6180339887498949;
constexpr double kTieTolerance = 1e-12;
constexpr double kEstimateMargin = 1e-3;

struct ThetaMax {
  double value;
  double theta;
  std::uint64_t samples;
  bool refined;
};

// Maximizes g >= 0 on [lo, hi].
ThetaMax maximize_over_theta(const std::function<double(double)>& g, double lo, double hi,
                             std::uint64_t samples, const SupNormOptions& options) {
  std::vector<double> theta(samples);
  std::vector<double> value(samples);
  const double step = (hi - lo) / static_cast<double>(samples - 1);
  for (std::uint64_t k = 0; k < samples; ++k) {
    theta[k] = (k + 1 == samples) ? hi : lo + step * static_cast<double>(k);
    value[k] = g(theta[k]);
    if (!std::isfinite(value[k])) {
      throw computation_error("non-finite sample at theta = " + std::to_string(theta[k]));
    }
  }

  std::vector<std::size_t> peaks;
  for (std::size_t k = 0; k < samples; ++k) {
    const bool left_ok = (k == 0) || value[k] >= value[k - 1];
    const bool right_ok = (k + 1 == samples) || value[k] >= value[k + 1];
    if (left_ok && right_ok) peaks.push_back(k);
  }
  // Peak heights estimated by the parabola through the three samples around each peak.
  std::vector<double> estimate(samples, 0.0);
  for (std::size_t k : peaks) {
    estimate[k] = value[k];
    if (k > 0 && k + 1 < samples) {
      const double curvature = value[k - 1] - 2.0 * value[k] + value[k + 1];
      if (curvature < 0.0) {
        const double slope = value[k + 1] - value[k - 1];
        estimate[k] = value[k] - slope * slope / (8.0 * curvature);
      }
    }
  }
  // Candidates ordered by estimated height, smaller theta first on ties.
  std::stable_sort(peaks.begin(), peaks.end(),
                   [&](std::size_t a, std::size_t b) { return estimate[a] > estimate[b]; });

  auto refine_peak = [&](std::size_t k) {
    double best_value = value[k];
    double best_theta = theta[k];
    if (options.refine) {
      double a = theta[k == 0 ? 0 : k - 1];
      double b = theta[k + 1 == samples ? k : k + 1];
      double c = b - kInvGolden * (b - a);
      double d = a + kInvGolden * (b - a);
      double gc = g(c);
      double gd = g(d);
      while (b - a > options.theta_tolerance) {
        if (gc >= gd) {
          b = d;
          d = c;
          gd = gc;
          c = b - kInvGolden * (b - a);
          gc = g(c);
        } else {
          a = c;
          c = d;
          gc = gd;
          d = a + kInvGolden * (b - a);
          gd = g(d);
        }
        if (gc > best_value) {
          best_value = gc;
          best_theta = c;
        }
        if (gd > best_value) {
          best_value = gd;
          best_theta = d;
        }
      }
    }
    return std::pair{best_value, best_theta};
  };

  std::vector<std::pair<double, double>> found;  // (value, theta)
  const std::size_t leading = std::min(peaks.size(), std::max<std::size_t>(options.candidates, 1));
  for (std::size_t i = 0; i < leading; ++i) found.push_back(refine_peak(peaks[i]));
  if (options.refine) {
    // Near-equal peaks (flat envelopes) may be misranked by the estimate.
    double best = 0.0;
    for (const auto& [v, th] : found) best = std::max(best, v);
    for (std::size_t i = leading; i < peaks.size(); ++i) {
      if (estimate[peaks[i]] < best * (1.0 - kEstimateMargin)) break;
      found.push_back(refine_peak(peaks[i]));
    }
  }

  double top = 0.0;
  for (const auto& [v, th] : found) top = std::max(top, v);
  double arg_theta = found.empty() ? lo : hi;
  for (const auto& [v, th] : found) {
    if (v >= top * (1.0 - kTieTolerance)) arg_theta = std::min(arg_theta, th);
  }
  return {top, arg_theta, samples, options.refine};
}

double theta_to_t(double theta) {
  if (theta <= 0.0) return 1.0;
  if (theta >= kPi) return -1.0;
  return std::cos(theta);
}

std::uint64_t scaled_samples(std::uint64_t degree, double length,
                             const SupNormOptions& options) {
  if (options.grid_points != 0) return std::max<std::uint64_t>(options.grid_points, 256);
  const double full = static_cast<double>(default_grid_points(degree));
  return std::max<std::uint64_t>(256, static_cast<std::uint64_t>(std::ceil(full * length / kPi)));
}

}  // namespace

ThetaInterval::ThetaInterval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!(lo >= 0.0) || !(hi <= kPi) || !(lo < hi)) {
    throw domain_error("theta interval must satisfy 0 <= lo < hi <= pi, got [" +
                       std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
}

std::uint64_t default_grid_points(std::uint64_t degree) {
  return std::max<std::uint64_t>(4096, 32 * (degree + 1));
}

SupNormEstimate sup_norm(const std::function<double(double)>& f, std::uint64_t degree_hint,
                         const SupNormOptions& options) {
  const std::uint64_t samples =
      options.grid_points != 0 ? options.grid_points : default_grid_points(degree_hint);
  if (samples < 64) throw domain_error("sup_norm needs at least 64 grid points");
  const auto best = maximize_over_theta(
      [&](double theta) { return std::abs(f(theta_to_t(theta))); }, 0.0, kPi, samples, options);
  return {best.value, theta_to_t(best.theta), best.theta, samples, best.refined};
}

SupNormEstimate jacobi_sup_norm(const JacobiParams& params, std::uint64_t n) {
  const double a = params.alpha();
  const double b = params.beta();
  auto grid = sup_norm([&](double t) { return jacobi_value(params, n, t); }, n);
  const bool plus_branch = a >= b && a >= -0.5;
  const bool minus_branch = b >= a && b >= -0.5;
  if (!plus_branch && !minus_branch) return grid;

  const auto ends = jacobi_endpoint_values(params, n);
  const double closed = plus_branch ? ends.at_plus_one : ends.abs_at_minus_one;
  if (std::abs(grid.value - closed) > 1e-9 * closed) {
    throw computation_error("grid sup norm " + std::to_string(grid.value) +
                            " disagrees with endpoint value " + std::to_string(closed));
  }
  grid.value = closed;
  grid.argmax_t = plus_branch ? 1.0 : -1.0;
  grid.argmax_theta = plus_branch ? 0.0 : kPi;
  return grid;
}

ThetaMaxEstimate weighted_theta_argmax(const JacobiParams& params, std::uint64_t n,
                                       const ThetaInterval& interval, WeightKind kind,
                                       const SupNormOptions& options) {
  const double power = params.alpha() + 0.5;
  auto weight = [&](double theta) {
    switch (kind) {
      case WeightKind::sin_half_theta:
        return std::sin(0.5 * theta);
      case WeightKind::theta_power:
        return std::pow(theta, power);
      case WeightKind::none:
        break;
    }
    return 1.0;
  };
  const std::uint64_t samples = scaled_samples(n, interval.length(), options);
  const auto best = maximize_over_theta(
      [&](double theta) {
        return weight(theta) * std::abs(jacobi_value(params, n, theta_to_t(theta)));
      },
      interval.lo(), interval.hi(), samples, options);
  return {best.value, best.theta, best.samples};
}

double weighted_theta_max(const JacobiParams& params, std::uint64_t n,
                          const ThetaInterval& interval, WeightKind kind,
                          const SupNormOptions& options) {
  return weighted_theta_argmax(params, n, interval, kind, options).value;
}

double special_point_value(const JacobiParams& params, std::uint64_t n) {
  if (n == 0) throw domain_error("special_point_value requires n >= 1");
  if (!(params.alpha() > -0.5)) {
    throw domain_error("special_point_value requires alpha > -1/2");
  }
  return std::abs(jacobi_value(params, n, std::cos(1.0 / static_cast<double>(n))));
}

}  // namespace gegen
