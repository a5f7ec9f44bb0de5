#include "gegen/asymptotics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

#include "gegen/errors.hpp"
#include "gegen/extrema.hpp"
#include "gegen/special.hpp"

namespace gegen {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kPi = std::numbers::pi;

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

void require_increasing(std::span<const std::uint64_t> n_values, std::uint64_t minimum) {
  if (n_values.empty()) throw domain_error("n sequence must be nonempty");
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    if (n_values[i] < minimum) {
      throw domain_error("n values must be >= " + std::to_string(minimum));
    }
    if (i > 0 && n_values[i] <= n_values[i - 1]) {
      throw domain_error("n values must be strictly increasing");
    }
  }
}

double power(std::uint64_t n, double exponent) {
  return std::pow(static_cast<double>(n), exponent);
}

// Ratio range and exponent fit; the fit prefers n >= kFitMinimumN.
void summarize(AsymptoticReport& report) {
  if (report.records.empty()) throw domain_error("report has no records");
  report.ratio_min = std::numeric_limits<double>::infinity();
  report.ratio_max = -std::numeric_limits<double>::infinity();
  for (const auto& r : report.records) {
    report.ratio_min = std::min(report.ratio_min, r.normalized_ratio);
    report.ratio_max = std::max(report.ratio_max, r.normalized_ratio);
  }
  std::vector<AsymptoticRecord> tail;
  for (const auto& r : report.records) {
    if (r.n >= kFitMinimumN) tail.push_back(r);
  }
  if (tail.size() >= 3) {
    report.fitted_exponent = fit_exponent(tail);
  } else if (report.records.size() >= 3) {
    report.fitted_exponent = fit_exponent(report.records);
  } else {
    report.fitted_exponent = kNaN;
  }
}

Verdict band_rule(const AsymptoticReport& report, double band_tol) {
  return report.ratio_min > 0.0 && report.ratio_max <= band_tol * report.ratio_min
             ? Verdict::pass
             : Verdict::fail;
}

Verdict upper_bound_rule(const AsymptoticReport& report, double band_tol) {
  const double first = report.records.front().normalized_ratio;
  return report.ratio_max <= band_tol * first ? Verdict::pass : Verdict::fail;
}

AsymptoticReport make_part(const FamilyParams& params, std::string label, double target,
                           double band_tol, std::vector<AsymptoticRecord> records) {
  AsymptoticReport part(params, std::move(label), std::move(records));
  part.target_exponent = target;
  part.tolerance_used = band_tol;
  summarize(part);
  return part;
}

// Top-level fields mirror the first applicable part; the verdict is the
// conjunction over applicable parts.
AsymptoticReport compose(const FamilyParams& params, std::string label,
                         std::vector<AsymptoticReport> parts) {
  const auto lead = std::find_if(parts.begin(), parts.end(),
                                 [](const AsymptoticReport& p) { return p.applicable; });
  if (lead == parts.end()) throw domain_error(label + ": no check is applicable");
  AsymptoticReport report = *lead;
  report.params = params;
  report.label = std::move(label);
  report.note.clear();
  report.verdict = Verdict::pass;
  for (const auto& p : parts) {
    if (p.applicable && p.verdict == Verdict::fail) report.verdict = Verdict::fail;
  }
  report.parts = std::move(parts);
  return report;
}

AsymptoticReport not_applicable(const FamilyParams& params, std::string label,
                                std::string reason) {
  AsymptoticReport part(params, std::move(label));
  part.applicable = false;
  part.fitted_exponent = kNaN;
  part.target_exponent = kNaN;
  part.ratio_min = kNaN;
  part.ratio_max = kNaN;
  part.note = std::move(reason);
  return part;
}

template <typename Measure>
std::vector<AsymptoticRecord> theta_series(std::span<const std::uint64_t> n_values,
                                           double target, Measure&& measure) {
  std::vector<AsymptoticRecord> records(n_values.size());
  parallel_for(n_values.size(), 0, [&](std::size_t i) {
    const std::uint64_t n = n_values[i];
    const ThetaMaxEstimate est = measure(n);
    records[i] = {n, est.value, est.value / power(n, target), std::cos(est.argmax_theta)};
  });
  return records;
}

}  // namespace

const char* to_string(Verdict verdict) noexcept {
  return verdict == Verdict::pass ? "pass" : "fail";
}

std::vector<std::uint64_t> log_spaced_counts(std::uint64_t n_min, std::uint64_t n_max,
                                             std::uint64_t samples) {
  if (n_min == 0 || n_max < n_min) throw domain_error("need 1 <= n_min <= n_max");
  if (samples < 2 || n_min == n_max) return {n_min};
  std::vector<std::uint64_t> counts;
  const double ratio = static_cast<double>(n_max) / static_cast<double>(n_min);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(samples - 1);
    const auto n = static_cast<std::uint64_t>(
        std::llround(static_cast<double>(n_min) * std::pow(ratio, x)));
    const std::uint64_t clamped = std::clamp(n, n_min, n_max);
    if (counts.empty() || clamped > counts.back()) counts.push_back(clamped);
  }
  return counts;
}

std::vector<std::uint64_t> parity_balanced_counts(std::uint64_t n_min, std::uint64_t n_max,
                                                  std::uint64_t samples) {
  if (n_min == 0 || n_max < n_min) throw domain_error("need 1 <= n_min <= n_max");
  if (samples < 2 || n_min == n_max) return {n_min};
  std::vector<std::uint64_t> counts;
  const double ratio = static_cast<double>(n_max) / static_cast<double>(n_min);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const std::uint64_t parity = ((i + 1) / 2) % 2;
    const double x = static_cast<double>(n_min) *
                     std::pow(ratio, static_cast<double>(i) / static_cast<double>(samples - 1));
    auto n = static_cast<std::uint64_t>(std::floor(x));
    if (n % 2 != parity) ++n;
    // n is now the smallest candidate >= floor(x); step down if closer.
    if (n >= 2 && n - x > 1.0) n -= 2;
    while (n < n_min) n += 2;
    while (n > n_max && n >= 2) n -= 2;
    if (n < n_min) continue;
    if (counts.empty() || n > counts.back()) counts.push_back(n);
  }
  return counts;
}

std::vector<AsymptoticRecord> supnorm_series(const GegenParams& params,
                                             std::span<const std::uint64_t> n_values,
                                             const SweepOptions& options) {
  if (!(params.mu() > 0.0)) {
    throw domain_error("sup-norm growth n^max(lambda, mu) is only established for mu > 0");
  }
  require_increasing(n_values, 1);
  const double target = std::max(params.lambda(), params.mu());
  std::vector<AsymptoticRecord> records(n_values.size());
  parallel_for(n_values.size(), options.threads, [&](std::size_t i) {
    const std::uint64_t n = n_values[i];
    const OrthonormalGengeg poly(params, n);
    SupNormOptions sup_options;
    sup_options.grid_points = options.grid_points;
    const auto est = sup_norm(poly, n, sup_options);
    records[i] = {n, est.value, est.value / power(n, target), est.argmax_t};
  });
  return records;
}

double fit_exponent(std::span<const AsymptoticRecord> records) {
  if (records.size() < 3) throw domain_error("exponent fit needs at least 3 records");
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& r : records) {
    if (!(r.sup_norm > 0.0)) throw domain_error("exponent fit needs positive values");
    mean_x += std::log(static_cast<double>(r.n));
    mean_y += std::log(r.sup_norm);
  }
  const double count = static_cast<double>(records.size());
  mean_x /= count;
  mean_y /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& r : records) {
    const double dx = std::log(static_cast<double>(r.n)) - mean_x;
    sxx += dx * dx;
    sxy += dx * (std::log(r.sup_norm) - mean_y);
  }
  if (!(sxx > 0.0)) throw domain_error("exponent fit needs distinct n");
  return sxy / sxx;
}

AsymptoticReport verify_theorem1(const GegenParams& params, std::uint64_t n_min,
                                 std::uint64_t n_max, std::uint64_t samples,
                                 double slope_tol, double band_tol,
                                 const SweepOptions& options) {
  if (!(params.mu() > 0.0)) {
    throw domain_error("the sup-norm theorem requires mu > 0 (got mu = " +
                       std::to_string(params.mu()) + ")");
  }
  if (n_min < 10) throw domain_error("verify_theorem1 requires n_min >= 10");
  if (n_max <= n_min) throw domain_error("verify_theorem1 requires n_max > n_min");
  if (samples < 8) throw domain_error("verify_theorem1 requires samples >= 8");
  if (!(slope_tol > 0.0) || !(band_tol >= 1.0)) {
    throw domain_error("tolerances must satisfy slope_tol > 0 and band_tol >= 1");
  }

  const auto counts = parity_balanced_counts(n_min, n_max, samples);
  const double target = std::max(params.lambda(), params.mu());
  auto judge = [&](AsymptoticReport& r) {
    r.slope_tolerance = slope_tol;
    const bool slope_ok = r.records.size() >= 3 && std::isfinite(r.fitted_exponent) &&
                          std::abs(r.fitted_exponent - target) <= slope_tol;
    r.verdict = (slope_ok && band_rule(r, band_tol) == Verdict::pass) ? Verdict::pass
                                                                      : Verdict::fail;
    if (r.records.size() < 3) r.note = "fewer than 3 records; exponent not fitted";
  };

  auto records = supnorm_series(params, counts, options);
  AsymptoticReport report = make_part(params, "theorem1", target, band_tol, records);
  judge(report);

  for (int parity = 0; parity < 2; ++parity) {
    std::vector<AsymptoticRecord> subset;
    for (const auto& r : records) {
      if (static_cast<int>(r.n % 2) == parity) subset.push_back(r);
    }
    const std::string label = parity == 0 ? "theorem1/even" : "theorem1/odd";
    if (subset.empty()) {
      report.parts.push_back(not_applicable(params, label, "no n of this parity"));
      continue;
    }
    AsymptoticReport part = make_part(params, label, target, band_tol, std::move(subset));
    judge(part);
    report.parts.push_back(std::move(part));
  }
  return report;
}

std::vector<LowerBoundWitness> theorem1_witnesses(const GegenParams& params,
                                                  std::span<const std::uint64_t> n_values) {
  std::vector<LowerBoundWitness> witnesses;
  const double lam = params.lambda();
  const double mu = params.mu();
  const JacobiParams swapped(mu + 0.5, lam - 0.5);
  for (std::uint64_t n : n_values) {
    if (n % 2 == 0 || n < 3) continue;
    const std::uint64_t k = n / 2;
    const double coefficient = orthonormal_coefficient(params, n).value;
    const double kd = static_cast<double>(k);
    witnesses.push_back(
        {n, coefficient * rising_over_factorial(lam + 0.5, k),
         coefficient * std::sin(0.5 / kd) *
             std::abs(jacobi_value(swapped, k, std::cos(1.0 / kd)))});
  }
  return witnesses;
}

AsymptoticReport verify_lemma1(const JacobiParams& params,
                               std::span<const std::uint64_t> n_values, double band_tol) {
  if (!(params.alpha() > 0.5)) {
    throw domain_error("the weighted Jacobi bound requires alpha > 1/2 (got alpha = " +
                       std::to_string(params.alpha()) + ")");
  }
  require_increasing(n_values, 1);
  const double near_target = params.alpha() - 1.0;
  const double far_target = std::max(params.beta(), -0.5);
  const ThetaInterval near(0.0, kPi / 2.0);
  const ThetaInterval far(kPi / 2.0, kPi);

  std::vector<AsymptoticReport> parts;
  parts.push_back(make_part(
      params, "lemma1/near", near_target, band_tol,
      theta_series(n_values, near_target, [&](std::uint64_t n) {
        return weighted_theta_argmax(params, n, near, WeightKind::sin_half_theta);
      })));
  parts.push_back(make_part(
      params, "lemma1/far", far_target, band_tol,
      theta_series(n_values, far_target, [&](std::uint64_t n) {
        return weighted_theta_argmax(params, n, far, WeightKind::sin_half_theta);
      })));
  for (auto& p : parts) p.verdict = upper_bound_rule(p, band_tol);
  return compose(params, "lemma1", std::move(parts));
}

AsymptoticReport verify_jacobi_facts(const JacobiParams& params,
                                     std::span<const std::uint64_t> n_values,
                                     double band_tol) {
  require_increasing(n_values, 1);
  const double a = params.alpha();
  const double b = params.beta();
  std::vector<AsymptoticReport> parts;

  // Endpoint location of the sup norm.
  const bool plus_branch = a >= b && a >= -0.5;
  const bool minus_branch = b >= a && b >= -0.5;
  if (plus_branch || minus_branch) {
    constexpr double kEndpointTolerance = 1e-9;
    std::vector<AsymptoticRecord> records(n_values.size());
    parallel_for(n_values.size(), 0, [&](std::size_t i) {
      const std::uint64_t n = n_values[i];
      const auto grid = sup_norm([&](double t) { return jacobi_value(params, n, t); }, n);
      const auto ends = jacobi_endpoint_values(params, n);
      const double closed = plus_branch ? ends.at_plus_one : ends.abs_at_minus_one;
      records[i] = {n, grid.value, grid.value / closed, grid.argmax_t};
    });
    AsymptoticReport part =
        make_part(params, "endpoint-sup", plus_branch ? a : b, kEndpointTolerance, records);
    part.verdict = Verdict::pass;
    for (const auto& r : part.records) {
      if (!(std::abs(r.normalized_ratio - 1.0) <= kEndpointTolerance)) part.verdict = Verdict::fail;
    }
    part.note = plus_branch ? "maximum at t = 1 (alpha >= beta, alpha >= -1/2)"
                            : "maximum at t = -1 (beta >= alpha, beta >= -1/2)";
    parts.push_back(std::move(part));
  } else {
    parts.push_back(not_applicable(params, "endpoint-sup", "requires max(alpha, beta) >= -1/2"));
  }

  const double half_target = std::max(a, -0.5);
  parts.push_back(make_part(
      params, "half-segment", half_target, band_tol,
      theta_series(n_values, half_target, [&](std::uint64_t n) {
        return weighted_theta_argmax(params, n, ThetaInterval(0.0, kPi / 2.0), WeightKind::none);
      })));
  parts.back().verdict = upper_bound_rule(parts.back(), band_tol);

  if (a > -0.5) {
    std::vector<AsymptoticRecord> records;
    for (std::uint64_t n : n_values) {
      const double value = special_point_value(params, n);
      records.push_back({n, value, value / power(n, a), std::cos(1.0 / static_cast<double>(n))});
    }
    parts.push_back(make_part(params, "special-point", a, band_tol, std::move(records)));
    parts.back().verdict = band_rule(parts.back(), band_tol);
  } else {
    parts.push_back(not_applicable(params, "special-point", "requires alpha > -1/2"));
  }

  parts.push_back(make_part(
      params, "theta-outer", -0.5, band_tol,
      theta_series(n_values, -0.5, [&](std::uint64_t n) {
        return weighted_theta_argmax(params, n,
                                     ThetaInterval(1.0 / static_cast<double>(n), kPi / 2.0),
                                     WeightKind::theta_power);
      })));
  parts.back().verdict = upper_bound_rule(parts.back(), band_tol);

  parts.push_back(make_part(
      params, "theta-inner", a, band_tol,
      theta_series(n_values, a, [&](std::uint64_t n) {
        return weighted_theta_argmax(params, n,
                                     ThetaInterval(0.0, 1.0 / static_cast<double>(n)),
                                     WeightKind::none);
      })));
  parts.back().verdict = upper_bound_rule(parts.back(), band_tol);

  return compose(params, "jacobi-facts", std::move(parts));
}

AsymptoticReport verify_coefficient_growth(const GegenParams& params,
                                           std::span<const std::uint64_t> n_values,
                                           double band_tol) {
  require_increasing(n_values, 1);
  std::vector<AsymptoticReport> parts;
  for (int parity = 0; parity < 2; ++parity) {
    std::vector<AsymptoticRecord> records;
    for (std::uint64_t n : n_values) {
      const double value = orthonormal_coefficient(params, 2 * n + parity).value;
      records.push_back({n, value, value / std::sqrt(static_cast<double>(n)), kNaN});
    }
    parts.push_back(make_part(params, parity == 0 ? "coefficients/even" : "coefficients/odd",
                              0.5, band_tol, std::move(records)));
    parts.back().verdict = band_rule(parts.back(), band_tol);
  }
  return compose(params, "coefficients", std::move(parts));
}

}  // namespace gegen
