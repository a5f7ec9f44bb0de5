#pragma once

// n-sweeps that turn the asymptotic statements about Jacobi and orthonormal
// generalized Gegenbauer polynomials into measured ratios, exponent fits and
// pass/fail verdicts.
//
// Two pass rules are used:
//   band:        ratio_max / ratio_min <= band_tol  (two-sided, for ~)
//   upper bound: ratio_max <= band_tol * ratio at the smallest n  (for <~)

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gegen/gengeg.hpp"
#include "gegen/jacobi.hpp"

namespace gegen {

enum class Verdict { pass, fail };

const char* to_string(Verdict verdict) noexcept;

struct AsymptoticRecord {
  std::uint64_t n = 0;
  double sup_norm = 0.0;          // measured quantity (a maximum or coefficient)
  double normalized_ratio = 0.0;  // sup_norm / n^target_exponent
  double argmax_t = 0.0;          // NaN where no location applies
};

using FamilyParams = std::variant<GegenParams, JacobiParams>;

struct AsymptoticReport {
  explicit AsymptoticReport(FamilyParams family, std::string name = {},
                            std::vector<AsymptoticRecord> rows = {})
      : params(std::move(family)), label(std::move(name)), records(std::move(rows)) {}

  FamilyParams params;
  std::string label;
  std::vector<AsymptoticRecord> records;
  double fitted_exponent = 0.0;  // NaN when fewer than 3 records
  double target_exponent = 0.0;
  double ratio_min = 0.0;
  double ratio_max = 0.0;
  Verdict verdict = Verdict::fail;
  double tolerance_used = 0.0;
  double slope_tolerance = 0.0;  // only meaningful for exponent-fit verdicts
  bool applicable = true;        // false: hypotheses fail, part skipped
  std::string note;
  std::vector<AsymptoticReport> parts;
};

struct SweepOptions {
  unsigned threads = 0;           // 0 selects std::thread::hardware_concurrency()
  std::uint64_t grid_points = 0;  // 0 selects the sup_norm default grid
};

/// Strictly increasing integers round(n_min (n_max/n_min)^{i/(samples-1)}),
/// duplicates removed.
std::vector<std::uint64_t> log_spaced_counts(std::uint64_t n_min, std::uint64_t n_max,
                                             std::uint64_t samples);

/// Log-spaced n whose parities follow the repeating pattern even, odd, odd,
/// even. Each n is the integer of the required parity nearest the exact
/// log-spaced value. Even and odd indices then have the same mean log n, so
/// the different asymptotic constants of the two subsequences do not tilt a
/// pooled log-log fit.
std::vector<std::uint64_t> parity_balanced_counts(std::uint64_t n_min, std::uint64_t n_max,
                                                  std::uint64_t samples);

/// ||C~_n||_inf and ||C~_n||_inf / n^{max(lambda,mu)} for each n. Requires
/// mu > 0 and strictly increasing n >= 1. Records are in input order and do
/// not depend on the thread count.
std::vector<AsymptoticRecord> supnorm_series(const GegenParams& params,
                                             std::span<const std::uint64_t> n_values,
                                             const SweepOptions& options = {});

/// Least-squares slope of log sup_norm against log n. Needs >= 3 records
/// with distinct n.
double fit_exponent(std::span<const AsymptoticRecord> records);

inline constexpr double kDefaultSlopeTolerance = 0.05;
inline constexpr double kDefaultBandTolerance = 10.0;
inline constexpr std::uint64_t kDefaultSamples = 16;
/// Fits use only n >= this when at least three such records exist.
inline constexpr std::uint64_t kFitMinimumN = 100;

/// Sweep over parity_balanced_counts(n_min, n_max, samples). Passes iff the fitted exponent
/// is within slope_tol of max(lambda, mu) and the ratio band is within
/// band_tol. parts holds the even-n and odd-n subsequences with their own
/// fits and verdicts under the same rule.
AsymptoticReport verify_theorem1(const GegenParams& params, std::uint64_t n_min,
                                 std::uint64_t n_max, std::uint64_t samples,
                                 double slope_tol, double band_tol,
                                 const SweepOptions& options = {});

/// Point witnesses below ||C~_{2k+1}||_inf: the value at t = 1 and the value
/// at t = sin(1/(2k)), both from closed forms independent of the grid search.
struct LowerBoundWitness {
  std::uint64_t n = 0;
  double endpoint_value = 0.0;
  double special_point_value = 0.0;
};

/// Witnesses for odd n = 2k+1 with k >= 1; other n are skipped.
std::vector<LowerBoundWitness> theorem1_witnesses(const GegenParams& params,
                                                  std::span<const std::uint64_t> n_values);

/// sin(theta/2)-weighted maxima of |P_n(cos theta)| on [0, pi/2] against
/// n^{alpha-1} and on [pi/2, pi] against n^{max(beta,-1/2)}; both must pass
/// the upper-bound rule. Requires alpha > 1/2.
AsymptoticReport verify_lemma1(const JacobiParams& params,
                               std::span<const std::uint64_t> n_values, double band_tol);

/// Four checks on P_n^{(alpha,beta)}:
///   endpoint-sup    grid sup norm equals the endpoint closed form (1e-9)
///   half-segment    max over [0,1] against n^{max(alpha,-1/2)}, upper bound
///   special-point   |P_n(cos 1/n)| against n^alpha, band (alpha > -1/2)
///   theta-outer     max over [1/n, pi/2] of theta^{alpha+1/2}|P_n| against n^{-1/2}
///   theta-inner     max over [0, 1/n] of |P_n| against n^alpha
/// The theta checks are upper-bound rules. Parts whose hypotheses fail are
/// marked not applicable and excluded from the verdict.
AsymptoticReport verify_jacobi_facts(const JacobiParams& params,
                                     std::span<const std::uint64_t> n_values,
                                     double band_tol);

/// a~_{2n} / sqrt(n) and a~_{2n+1} / sqrt(n); both must pass the band rule.
AsymptoticReport verify_coefficient_growth(const GegenParams& params,
                                           std::span<const std::uint64_t> n_values,
                                           double band_tol);

}  // namespace gegen
