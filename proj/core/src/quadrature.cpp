#include "gegen/quadrature.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <tuple>

#include "gegen/special.hpp"

namespace gegen {

namespace {

constexpr int kMaxNewtonIterations = 50;
constexpr double kPi = std::numbers::pi;

struct PolyAndDerivative {
  double value;
  double derivative;
};

// P_m(x) and P_m'(x) for x in (-1, 1), derivative from
// (2m+a+b)(1-x^2) P_m' = m[(a-b) - (2m+a+b)x] P_m + 2(m+a)(m+b) P_{m-1}.
PolyAndDerivative eval_with_derivative(const JacobiParams& params, std::uint64_t m, double x) {
  const auto [p, p_prev] = jacobi_value_pair(params, m, x);
  const double a = params.alpha();
  const double b = params.beta();
  const double md = static_cast<double>(m);
  const double s = 2.0 * md + a + b;
  const double numer = md * ((a - b) - s * x) * p + 2.0 * (md + a) * (md + b) * p_prev;
  return {p, numer / (s * (1.0 - x * x))};
}

// log of 2^{a+b+1} Gamma(m+a+1) Gamma(m+b+1) / (Gamma(m+a+b+1) m!).
double log_weight_constant(const JacobiParams& params, std::uint64_t m) {
  const double a = params.alpha();
  const double b = params.beta();
  const double md = static_cast<double>(m);
  return (a + b + 1.0) * std::numbers::ln2 + log_gamma(PositiveReal(md + a + 1.0)) +
         log_gamma(PositiveReal(md + b + 1.0)) - log_gamma(PositiveReal(md + a + b + 1.0)) -
         log_gamma(PositiveReal(md + 1.0));
}

std::optional<double> newton_root(const JacobiParams& params, std::uint64_t m, double x) {
  for (int it = 0; it < kMaxNewtonIterations; ++it) {
    const auto [p, dp] = eval_with_derivative(params, m, x);
    if (dp == 0.0 || !std::isfinite(dp)) return std::nullopt;
    const double step = p / dp;
    const double next = x - step;
    if (!(next > -1.0 && next < 1.0)) return std::nullopt;
    x = next;
    if (std::abs(step) <= 1e-15) {
      // One more step lands on machine precision under quadratic convergence.
      const auto [p2, dp2] = eval_with_derivative(params, m, x);
      const double polish = x - p2 / dp2;
      if (polish > -1.0 && polish < 1.0) x = polish;
      return x;
    }
  }
  return std::nullopt;
}

// True when every node sits in its own sign-change interval of P_m: the test
// points -1, the midpoints between nodes, and 1 must alternate in sign.
bool separates_roots(const JacobiParams& params, std::uint64_t m,
                     const std::vector<double>& sorted_nodes) {
  if (sorted_nodes.size() != m) return false;
  for (std::size_t i = 1; i < sorted_nodes.size(); ++i) {
    if (!(sorted_nodes[i] > sorted_nodes[i - 1])) return false;
  }
  double previous = jacobi_value(params, m, -1.0);
  for (std::size_t i = 1; i <= sorted_nodes.size(); ++i) {
    const double x =
        i == sorted_nodes.size() ? 1.0 : 0.5 * (sorted_nodes[i - 1] + sorted_nodes[i]);
    const double current = jacobi_value(params, m, x);
    if (!(previous * current < 0.0)) return false;
    previous = current;
  }
  return true;
}

// Symmetric weights have nodes symmetric about 0; enforce it exactly.
void symmetrize(const JacobiParams& params, std::vector<double>& roots) {
  if (params.alpha() != params.beta()) return;
  const std::size_t m = roots.size();
  for (std::size_t i = 0; i < m / 2; ++i) {
    const double x = 0.5 * (roots[m - 1 - i] - roots[i]);
    roots[i] = -x;
    roots[m - 1 - i] = x;
  }
  if (m % 2 == 1) roots[m / 2] = 0.0;
}

QuadratureRule assemble(const JacobiParams& params, std::uint64_t m, std::vector<double> nodes) {
  std::sort(nodes.begin(), nodes.end());
  const double log_constant = log_weight_constant(params, m);
  std::vector<double> weights(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double x = nodes[i];
    const double dp = eval_with_derivative(params, m, x).derivative;
    weights[i] = std::exp(log_constant - std::log1p(-x * x) - 2.0 * std::log(std::abs(dp)));
  }
  return QuadratureRule(params, std::move(nodes), std::move(weights));
}

// Roots from sign changes on a theta-uniform grid, then bisection with a
// Newton polish.
std::vector<double> bracketed_roots(const JacobiParams& params, std::uint64_t m) {
  const std::uint64_t samples = 64 * (m + 1);
  std::vector<double> roots;
  roots.reserve(m);
  // P_m(+-1) never vanishes, so the closed grid brackets every root.
  double prev_x = 1.0;
  double prev_p = jacobi_value(params, m, prev_x);
  for (std::uint64_t k = 1; k <= samples; ++k) {
    const double x = std::cos(kPi * static_cast<double>(k) / static_cast<double>(samples));
    const double p = jacobi_value(params, m, x);
    if (p == 0.0) {
      roots.push_back(x);
    } else if ((p < 0.0) != (prev_p < 0.0) && prev_p != 0.0) {
      double lo = x;
      double hi = prev_x;
      double p_lo = p;
      for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double p_mid = jacobi_value(params, m, mid);
        if ((p_mid < 0.0) == (p_lo < 0.0)) {
          lo = mid;
          p_lo = p_mid;
        } else {
          hi = mid;
        }
      }
      const double guess = 0.5 * (lo + hi);
      const auto polished = newton_root(params, m, guess);
      roots.push_back(polished && std::abs(*polished - guess) < hi - lo + 1e-14 ? *polished
                                                                                 : guess);
    }
    prev_x = x;
    prev_p = p;
  }
  return roots;
}

}  // namespace

QuadratureRule::QuadratureRule(JacobiParams params, std::vector<double> nodes,
                               std::vector<double> weights)
    : params_(params), nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.empty() || nodes_.size() != weights_.size()) {
    throw domain_error("quadrature rule needs matching, nonempty nodes and weights");
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!(nodes_[i] > -1.0 && nodes_[i] < 1.0)) {
      throw computation_error("quadrature node outside (-1, 1)");
    }
    if (i > 0 && !(nodes_[i] > nodes_[i - 1])) {
      throw computation_error("quadrature nodes are not strictly increasing");
    }
    if (!(weights_[i] > 0.0) || !std::isfinite(weights_[i])) {
      throw computation_error("quadrature weight is not positive and finite");
    }
  }
}

namespace detail {

QuadratureRule gauss_jacobi_rule_bracketed(const JacobiParams& params, std::uint64_t m) {
  if (m == 0) throw domain_error("quadrature rule needs m >= 1 points");
  auto roots = bracketed_roots(params, m);
  std::sort(roots.begin(), roots.end());
  symmetrize(params, roots);
  if (!separates_roots(params, m, roots)) {
    throw computation_error("Gauss-Jacobi node solver found " + std::to_string(roots.size()) +
                            " distinct roots of P_" + std::to_string(m) + "^(" +
                            std::to_string(params.alpha()) + "," +
                            std::to_string(params.beta()) + "), expected " +
                            std::to_string(m));
  }
  return assemble(params, m, std::move(roots));
}

}  // namespace detail

QuadratureRule gauss_jacobi_rule(const JacobiParams& params, std::uint64_t m) {
  if (m == 0) throw domain_error("quadrature rule needs m >= 1 points");
  const double a = params.alpha();
  const double b = params.beta();
  const double md = static_cast<double>(m);
  std::vector<double> roots;
  roots.reserve(m);
  bool converged = true;
  for (std::uint64_t i = 1; i <= m && converged; ++i) {
    // Asymptotic zero locations; exact for Chebyshev weights.
    const double theta =
        kPi * (static_cast<double>(i) + 0.5 * a - 0.25) / (md + 0.5 * (a + b + 1.0));
    const double guess = std::cos(std::clamp(theta, 0.0, kPi));
    const auto root = newton_root(params, m, std::clamp(guess, -1.0 + 1e-15, 1.0 - 1e-15));
    if (root) {
      roots.push_back(*root);
    } else {
      converged = false;
    }
  }
  if (converged) {
    std::sort(roots.begin(), roots.end());
    symmetrize(params, roots);
    converged = separates_roots(params, m, roots);
  }
  if (!converged) return detail::gauss_jacobi_rule_bracketed(params, m);
  return assemble(params, m, std::move(roots));
}

std::shared_ptr<const QuadratureRule> cached_gauss_jacobi_rule(const JacobiParams& params,
                                                               std::uint64_t m) {
  using Key = std::tuple<double, double, std::uint64_t>;
  static std::mutex mutex;
  static std::map<Key, std::shared_ptr<const QuadratureRule>> cache;
  const Key key{params.alpha(), params.beta(), m};
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto rule = std::make_shared<const QuadratureRule>(gauss_jacobi_rule(params, m));
  std::lock_guard lock(mutex);
  return cache.try_emplace(key, std::move(rule)).first->second;
}

Matrix gram_matrix_orthonormal(const GegenParams& params, std::uint64_t n_max,
                               std::uint64_t m) {
  if (m < n_max + 8) {
    throw computation_error("gram_matrix_orthonormal needs at least n_max + 8 = " +
                            std::to_string(n_max + 8) + " quadrature points, got " +
                            std::to_string(m));
  }
  const double lam = params.lambda();
  const double mu = params.mu();
  const double scale = std::exp(-(lam + mu) * std::numbers::ln2);
  const std::size_t size = n_max + 1;

  std::vector<double> coefficient(size);
  for (std::size_t i = 0; i < size; ++i) coefficient[i] = orthonormal_coefficient(params, i).value;

  // Jacobi degree k carries indices 2k and 2k+1.
  const std::uint64_t k_max = n_max / 2;
  auto tabulate = [&](const QuadratureRule& rule) {
    std::vector<EvalSequence> table;
    table.reserve(rule.size());
    for (double u : rule.nodes()) table.push_back(jacobi_eval(rule.params(), k_max, u));
    return table;
  };
  auto inner_integral = [](const QuadratureRule& rule, const std::vector<EvalSequence>& table,
                           std::uint64_t ka, std::uint64_t kb) {
    std::size_t node = 0;
    return integrate(rule, [&](double) {
      const auto& seq = table[node++];
      return seq[ka] * seq[kb];
    });
  };

  const QuadratureRule even_rule = gauss_jacobi_rule(params.inner_jacobi(0), m);
  const QuadratureRule odd_rule = gauss_jacobi_rule(params.inner_jacobi(1), m);
  const auto even_table = tabulate(even_rule);
  const auto odd_table = tabulate(odd_rule);

  Matrix gram(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i; j < size; ++j) {
      if ((i + j) % 2 != 0) continue;
      const bool even = (i % 2 == 0);
      const double integral = even ? inner_integral(even_rule, even_table, i / 2, j / 2)
                                   : 0.5 * inner_integral(odd_rule, odd_table, i / 2, j / 2);
      const double value = coefficient[i] * coefficient[j] * scale * integral;
      gram(i, j) = value;
      gram(j, i) = value;
    }
  }
  return gram;
}

double integrate_even_gengeg(const GegenParams& params, std::uint64_t m,
                             const std::function<double(double)>& g) {
  const auto rule = cached_gauss_jacobi_rule(params.inner_jacobi(0), m);
  const double scale = std::exp(-(params.lambda() + params.mu()) * std::numbers::ln2);
  return scale * integrate(*rule, [&](double u) { return g(0.5 * (1.0 + u)); });
}

}  // namespace gegen
