#include <gtest/gtest.h>

#include "ctoda/errors.hpp"
#include "ctoda/series.hpp"
#include "generators.hpp"

using ctoda::Rational;
using ctoda::Series;

namespace {

Series s_poly(std::initializer_list<Rational> c, int order) { return Series(c, order); }

}  // namespace

TEST(Series, ProductExamples) {
  EXPECT_EQ(s_poly({1, 1}, 2) * s_poly({1, -1}, 2), s_poly({1, 0, -1}, 2));
  const Series a = s_poly({1, 12, 288}, 2);
  EXPECT_EQ(a * a, s_poly({1, 24, 720}, 2));
}

TEST(Series, GeometricInverse) {
  EXPECT_EQ(s_poly({1, -1}, 3).inverse(), s_poly({1, 1, 1, 1}, 3));
  EXPECT_EQ(Series::constant(1, 3) / s_poly({1, -1}, 3), s_poly({1, 1, 1, 1}, 3));
}

TEST(Series, DivisionByNonUnitIsRejected) {
  EXPECT_THROW(Series::constant(1, 3) / Series::variable(3), ctoda::PreconditionError);
}

TEST(Series, LogExamples) {
  EXPECT_TRUE(log(Series::constant(1, 4)).is_zero());
  EXPECT_EQ(log(s_poly({1, 1}, 3)), s_poly({0, 1, Rational(-1, 2), Rational(1, 3)}, 3));
  EXPECT_EQ(log(s_poly({1, -12}, 2)), s_poly({0, -12, -72}, 2));
  EXPECT_THROW(log(s_poly({2, 1}, 3)), ctoda::PreconditionError);
}

TEST(Series, DerivativeComposePower) {
  EXPECT_EQ(s_poly({0, 0, 0, 1}, 3).derivative(), s_poly({0, 0, 3}, 2));
  const Series log1p = log(s_poly({1, 1}, 2));
  EXPECT_EQ(log1p.compose(s_poly({0, 1, 1}, 2)), s_poly({0, 1, Rational(1, 2)}, 2));
  EXPECT_EQ(s_poly({1, 1}, 2).pow(-2), s_poly({1, -2, 3}, 2));
  EXPECT_THROW(log1p.compose(s_poly({1, 1}, 2)), ctoda::PreconditionError);
}

TEST(Series, TruncationIsExplicit) {
  const Series a = s_poly({1, 2, 3}, 2);
  EXPECT_THROW(a[3], ctoda::TruncationError);
  EXPECT_THROW(a.truncated(3), ctoda::TruncationError);
  EXPECT_EQ(a.truncated(1), s_poly({1, 2}, 1));
  // Mixed orders propagate the minimum.
  EXPECT_EQ((a + s_poly({1}, 0)).order(), 0);
  EXPECT_EQ((a * s_poly({1, 1}, 1)).order(), 1);
}

TEST(SeriesProperty, RingAxioms) {
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(gen::integer(0, 7));
    const Series a = gen::series(n), b = gen::series(n), c = gen::series(n);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b - b, a);
  }
}

TEST(SeriesProperty, LeibnizRule) {
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(gen::integer(1, 8));
    const Series a = gen::series(n), b = gen::series(n);
    EXPECT_EQ((a * b).derivative(), a.derivative() * b.truncated(n - 1) + a.truncated(n - 1) * b.derivative());
  }
}

TEST(SeriesProperty, LogExpRoundTrip) {
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(gen::integer(0, 7));
    const Series u = gen::unit_series(n);
    const Series x = gen::nilpotent_series(n);
    EXPECT_EQ(exp(log(u)), u);
    EXPECT_EQ(log(exp(x)), x);
  }
}

TEST(SeriesProperty, InverseAndCompose) {
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(gen::integer(0, 7));
    Series u = gen::series(n);
    u[0] = gen::nonzero_rational();
    EXPECT_EQ(u * u.inverse(), Series::constant(1, n));
    const Series inner = gen::nilpotent_series(n);
    const Series a = gen::series(n), b = gen::series(n);
    // Composition is a ring homomorphism in the outer argument.
    EXPECT_EQ((a * b).compose(inner), a.compose(inner) * b.compose(inner));
  }
}

TEST(SeriesProperty, IntegralInvertsDerivative) {
  for (int trial = 0; trial < 40; ++trial) {
    const int n = static_cast<int>(gen::integer(0, 7));
    const Series a = gen::series(n);
    EXPECT_EQ(a.integral().derivative(), a);
    EXPECT_EQ(a.integral().order(), n + 1);
  }
}
