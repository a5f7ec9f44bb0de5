#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "gegen/errors.hpp"
#include "gegen/jacobi.hpp"
#include "gegen/quadrature.hpp"
#include "oracle.hpp"

using namespace gegen;
using gegen::test::relative_error;

TEST(JacobiParams, Validation) {
  EXPECT_NO_THROW(JacobiParams(-0.999, 7.0));
  EXPECT_THROW(JacobiParams(-1.0, 0.0), domain_error);
  EXPECT_THROW(JacobiParams(0.0, -1.5), domain_error);
  EXPECT_THROW(JacobiParams(std::numeric_limits<double>::quiet_NaN(), 0.0), domain_error);
  EXPECT_THROW(JacobiParams(0.0, std::numeric_limits<double>::infinity()), domain_error);
  EXPECT_EQ(JacobiParams(0.3, 1.2).swapped(), JacobiParams(1.2, 0.3));
}

TEST(JacobiEval, Examples) {
  const auto p0 = jacobi_eval(JacobiParams(0, 0), 0, 0.3);
  ASSERT_EQ(p0.n_max(), 0u);
  EXPECT_EQ(p0[0], 1.0);
  EXPECT_EQ(jacobi_eval(JacobiParams(2, 1), 5, 1.0)[5], 21.0);
  EXPECT_EQ(jacobi_eval(JacobiParams(0, 0), 1, 0.5)[1], 0.5);
}

TEST(JacobiEval, ReferenceValues) {
  // 50-digit references.
  EXPECT_LE(relative_error(jacobi_value(JacobiParams(2, 1), 5, 0.3), 0.3627159375), 1e-13);
  EXPECT_LE(relative_error(jacobi_value(JacobiParams(0.3, 1.2), 10, -0.45), -0.52690878494758466),
            1e-12);
  EXPECT_LE(relative_error(jacobi_value(JacobiParams(-0.4, 0.7), 37, 0.81), -0.014094988631935795),
            1e-10);
  EXPECT_LE(relative_error(jacobi_value(JacobiParams(2.5, 0.3), 200, 0.123), 0.015024361895059666),
            1e-9);
  EXPECT_LE(relative_error(jacobi_value(JacobiParams(0.5, -0.5), 1000, 0.9999), 2.5226307052232658),
            1e-9);
}

TEST(JacobiEval, MatchesHypergeometricSeries) {
  test::SplitMix64 rng(0x7ac0b1);
  for (int trial = 0; trial < 300; ++trial) {
    const double a = rng.open_closed(-1.0, 4.0);
    const double b = rng.open_closed(-1.0, 4.0);
    const double t = rng.uniform(-1.0, 1.0);
    const auto seq = jacobi_eval(JacobiParams(a, b), 20, t);
    for (unsigned n = 0; n <= 20; ++n) {
      const double ref = test::jacobi_series(a, b, n, t);
      EXPECT_LE(std::abs(seq[n] - ref), 1e-10 * (n + 1) * std::max(1.0, std::abs(ref)))
          << "a=" << a << " b=" << b << " n=" << n << " t=" << t;
    }
  }
}

TEST(JacobiEval, DegreeZeroIsExactlyOne) {
  test::SplitMix64 rng(0x7ac0b2);
  for (int trial = 0; trial < 100; ++trial) {
    const auto seq = jacobi_eval(JacobiParams(rng.open_closed(-1, 5), rng.open_closed(-1, 5)),
                                 rng.below(50), rng.uniform(-1, 1));
    EXPECT_EQ(seq[0], 1.0);
  }
}

TEST(JacobiEval, PairMatchesSequence) {
  const JacobiParams p(0.7, -0.2);
  const auto seq = jacobi_eval(p, 60, -0.37);
  const auto [pn, pn1] = jacobi_value_pair(p, 60, -0.37);
  EXPECT_EQ(pn, seq[60]);
  EXPECT_EQ(pn1, seq[59]);
  EXPECT_EQ(jacobi_value(p, 60, -0.37), seq[60]);
}

TEST(JacobiEval, RejectsPointsOutsideInterval) {
  EXPECT_THROW(jacobi_eval(JacobiParams(0, 0), 3, 1.0000001), domain_error);
  EXPECT_THROW(jacobi_value(JacobiParams(0, 0), 3, -1.5), domain_error);
  EXPECT_THROW(jacobi_value(JacobiParams(0, 0), 3, std::numeric_limits<double>::quiet_NaN()),
               domain_error);
}

TEST(JacobiSymmetry, ReflectionSwapsParameters) {
  for (const auto& [a, b] : {std::pair{0.3, 1.2}, std::pair{2.0, 0.0}, std::pair{-0.4, 0.7}}) {
    const JacobiParams p(a, b);
    for (int i = 0; i <= 1000; ++i) {
      const double t = -1.0 + 2.0 * i / 1000.0;
      const auto forward = jacobi_eval(p, 200, -t);
      const auto reflected = jacobi_eval(p.swapped(), 200, t);
      for (unsigned n = 0; n <= 200; ++n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        ASSERT_LE(std::abs(forward[n] - sign * reflected[n]),
                  1e-9 * std::max(1.0, std::abs(reflected[n])))
            << "a=" << a << " b=" << b << " n=" << n << " t=" << t;
      }
    }
  }
}

TEST(JacobiEndpoints, Examples) {
  auto e = jacobi_endpoint_values(JacobiParams(2, 1), 5);
  EXPECT_EQ(e.at_plus_one, 21.0);
  EXPECT_EQ(e.abs_at_minus_one, 6.0);
  e = jacobi_endpoint_values(JacobiParams(0, 0), 7);
  EXPECT_EQ(e.at_plus_one, 1.0);
  EXPECT_EQ(e.abs_at_minus_one, 1.0);
  e = jacobi_endpoint_values(JacobiParams(0.5, -0.5), 3);
  EXPECT_DOUBLE_EQ(e.at_plus_one, 2.1875);
  EXPECT_DOUBLE_EQ(e.abs_at_minus_one, 0.3125);
}

TEST(JacobiEndpoints, RecurrenceAgreesWithClosedForm) {
  test::SplitMix64 rng(0x7ac0b3);
  for (int trial = 0; trial < 60; ++trial) {
    const JacobiParams p(rng.open_closed(-1, 5), rng.open_closed(-1, 5));
    const auto plus = jacobi_eval(p, 500, 1.0);
    const auto minus = jacobi_eval(p, 500, -1.0);
    for (unsigned n = 0; n <= 500; ++n) {
      const auto e = jacobi_endpoint_values(p, n);
      ASSERT_LE(relative_error(plus[n], e.at_plus_one), 1e-9);
      ASSERT_LE(relative_error(std::abs(minus[n]), e.abs_at_minus_one), 1e-9);
    }
  }
}

TEST(JacobiEndpoints, ParameterNearMinusOne) {
  const JacobiParams p(-0.9999999, 0.0);
  EXPECT_LE(relative_error(jacobi_value(p, 500, 1.0), jacobi_endpoint_values(p, 500).at_plus_one),
            1e-9);
}

TEST(JacobiNorm, Examples) {
  EXPECT_NEAR(jacobi_norm_squared(JacobiParams(0, 0), 1), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(jacobi_norm_squared(JacobiParams(0, 0), 0), 2.0, 1e-15);
  EXPECT_NEAR(jacobi_norm_squared(JacobiParams(1, 0), 0), 2.0, 1e-15);
  EXPECT_LE(relative_error(jacobi_norm_squared(JacobiParams(0.3, 1.2), 5), 0.42719029771469302),
            1e-13);
}

TEST(JacobiNorm, DegreeZeroNearSingularSum) {
  // alpha + beta + 1 close to zero: h_0 is still the Beta integral.
  const JacobiParams p(-0.6, -0.4);
  const auto m = test::jacobi_moments(-0.6L, -0.4L, 0);
  EXPECT_LE(relative_error(jacobi_norm_squared(p, 0), static_cast<double>(m[0])), 1e-13);
  EXPECT_LE(relative_error(jacobi_zeroth_moment(p), static_cast<double>(m[0])), 1e-13);
}

TEST(JacobiNorm, Orthogonality) {
  for (const auto& [a, b] : {std::pair{0.0, 0.0}, std::pair{2.0, 1.0}, std::pair{-0.4, 0.7}}) {
    const JacobiParams p(a, b);
    const auto rule = gauss_jacobi_rule(p, 42);
    std::vector<EvalSequence> columns;
    for (double x : rule.nodes()) columns.push_back(jacobi_eval(p, 40, x));
    for (unsigned i = 0; i <= 40; ++i) {
      const double h = jacobi_norm_squared(p, i);
      for (unsigned j = 0; j <= 40; ++j) {
        double sum = 0.0;
        for (std::size_t k = 0; k < rule.size(); ++k) {
          sum += rule.weights()[k] * columns[k][i] * columns[k][j];
        }
        const double expected = (i == j) ? h : 0.0;
        EXPECT_LE(std::abs(sum - expected), 1e-9 * h) << "i=" << i << " j=" << j;
      }
    }
  }
}

TEST(JacobiWeight, Examples) {
  EXPECT_EQ(jacobi_weight(JacobiParams(0, 0), 0.7), 1.0);
  EXPECT_EQ(jacobi_weight(JacobiParams(1, 2), 0.0), 1.0);
  EXPECT_LE(relative_error(jacobi_weight(JacobiParams(0.5, 1.5), 0.5), 1.299038105676658), 1e-14);
  EXPECT_EQ(jacobi_weight(JacobiParams(1, 2), 1.0), 0.0);
}

TEST(JacobiWeight, PolesAndDomain) {
  EXPECT_THROW(jacobi_weight(JacobiParams(-0.5, 0), 1.0), domain_error);
  EXPECT_THROW(jacobi_weight(JacobiParams(0, -0.2), -1.0), domain_error);
  EXPECT_THROW(jacobi_weight(JacobiParams(0, 0), 1.2), domain_error);
}
