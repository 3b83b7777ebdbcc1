#include <gtest/gtest.h>

#include "ctoda/combinatorics.hpp"
#include "ctoda/errors.hpp"
#include "ctoda/graded.hpp"
#include "ctoda/monomial_series.hpp"
#include "ctoda/toda.hpp"
#include "generators.hpp"

using ctoda::GradedExpansion;
using ctoda::MonomialSeries;
using ctoda::Rational;
using ctoda::Series;

TEST(GradedLog, LowGenusParts) {
  const int n = 6;
  const GradedExpansion b = gen::graded(3, n);
  const GradedExpansion l = graded_log(b);
  const Series& z0 = b[0];
  EXPECT_EQ(l[0], log(z0) - Series::constant(0, n));
  EXPECT_EQ(l[1], b[1] / z0);
  EXPECT_EQ(l[2], b[2] / z0 - Rational(1, 2) * (b[1] * b[1]) / (z0 * z0));
  const Series u1 = b[1] / z0, u2 = b[2] / z0, u3 = b[3] / z0;
  EXPECT_EQ(l[3], u3 - u1 * u2 + Rational(1, 3) * u1 * u1 * u1);
}

TEST(GradedLog, VanishingHigherSlotsGivePlainLog) {
  GradedExpansion b(2, 5);
  b[0] = ctoda::z0_series(3, 5);
  const auto l = graded_log(b);
  EXPECT_EQ(l[0], log(b[0]));
  EXPECT_TRUE(l[1].is_zero());
  EXPECT_TRUE(l[2].is_zero());
}

TEST(GradedLog, RejectsNonUnitLeadingTerm) {
  GradedExpansion b(1, 3);
  EXPECT_THROW(graded_log(b), ctoda::PreconditionError);
}

TEST(GradedProperty, LogExpRoundTrip) {
  for (int trial = 0; trial < 20; ++trial) {
    const int G = static_cast<int>(gen::integer(0, 3));
    const int N = static_cast<int>(gen::integer(0, 6));
    const GradedExpansion b = gen::graded(G, N);
    EXPECT_EQ(graded_exp(graded_log(b)), b);
  }
}

TEST(GradedProperty, ProductIsCommutativeAndTruncates) {
  for (int trial = 0; trial < 20; ++trial) {
    const GradedExpansion a = gen::graded(3, 5), b = gen::graded(2, 5);
    const GradedExpansion p = a * b;
    EXPECT_EQ(p.genus_truncation(), 2);
    EXPECT_EQ(p, b * a);
    EXPECT_EQ(p[1], a[0] * b[1] + a[1] * b[0]);
  }
}

TEST(GradedExpansion, SlotAccessPastTruncation) {
  const GradedExpansion a(1, 2);
  EXPECT_THROW(a[2], ctoda::TruncationError);
  EXPECT_EQ(a.below(1).genus_truncation(), 1);
}

namespace {

GradedExpansion hierarchy_like(int nu, int G, int N) {
  return ctoda::HierarchyState::solve(nu, N, G).z();
}

}  // namespace

TEST(WDerivative, OrderZeroIsEvaluation) {
  const auto z = hierarchy_like(2, 2, 5);
  const auto f = MonomialSeries::scheme(z, 2);
  EXPECT_EQ(f.at_w_one(), z);
}

TEST(WDerivative, ExponentLawOnGenusZero) {
  // f_0 = w z_0(w s) at nu = 2, so d/dw multiplies s^n by n + 1.
  const auto z = hierarchy_like(2, 1, 6);
  const auto d = MonomialSeries::scheme(z, 2).w_derivative_at_one(1);
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(d[0][n], Rational(n + 1) * z[0][n]) << n;
}

TEST(WDerivative, FallingFactorialHitsZero) {
  // The genus-1 term s^2 of f_1 at nu = 2 carries w^{2 + 1 - 2} = w^1.
  const auto z = hierarchy_like(2, 1, 4);
  ASSERT_FALSE(z[1][2].is_zero());
  const auto d2 = MonomialSeries::scheme(z, 2).w_derivative_at_one(2);
  EXPECT_TRUE(d2[1][2].is_zero());
  EXPECT_FALSE(d2[1][3].is_zero());
}

TEST(WDerivative, NegativeExponentsUseGeneralizedFalling) {
  MonomialSeries m(3, 2);
  m.add({3, 0, -5}, Rational(1));
  const auto d = m.w_derivative_at_one(2);
  EXPECT_EQ(d[3][0], Rational(30));  // (-5)(-6)
}

TEST(WDerivativeProperty, LeibnizOnProducts) {
  for (int trial = 0; trial < 10; ++trial) {
    const int nu = static_cast<int>(gen::integer(2, 4));
    const auto a = MonomialSeries::scheme(gen::graded(2, 4), nu);
    const auto b = MonomialSeries::scheme(gen::graded(2, 4), nu, static_cast<int>(gen::integer(-2, 2)));
    const auto p = a * b;
    for (int j = 0; j <= 3; ++j) {
      // (ab)^{(j)} = sum_i binom(j, i) a^{(i)} b^{(j-i)}
      MonomialSeries expected(2, 4);
      for (int i = 0; i <= j; ++i) {
        auto term = a.w_derivative(i) * b.w_derivative(j - i);
        MonomialSeries scaled(2, 4);
        for (const auto& [k, c] : term.terms()) scaled.add(k, c * Rational(ctoda::binomial(j, i)));
        expected += scaled;
      }
      EXPECT_EQ(p.w_derivative_at_one(j), expected.at_w_one()) << "j=" << j;
      EXPECT_EQ(p.w_derivative(j), expected) << "j=" << j;
    }
  }
}
