#include <gtest/gtest.h>

#include "ctoda/combinatorics.hpp"
#include "ctoda/errors.hpp"
#include "ctoda/toda.hpp"

using ctoda::ForcingRoute;
using ctoda::GradedExpansion;
using ctoda::HierarchyState;
using ctoda::Rational;
using ctoda::Series;

namespace {

Series common(const Series& a, int order) { return a.truncated(std::min(a.order(), order)); }

}  // namespace

TEST(Z0, LowOrderCoefficients) {
  EXPECT_EQ(ctoda::z0_series(2, 3), Series({1, 12, 288, 8640}, 3));
  EXPECT_EQ(ctoda::z0_series(3, 2)[2], Rational(10800));
  for (int nu = 2; nu <= 6; ++nu) EXPECT_EQ(ctoda::z0_series(nu, 0), Series::constant(1, 0));
}

TEST(Z0, ConstraintResidualVanishes) {
  for (int nu = 2; nu <= 7; ++nu) {
    const int N = 14;
    const Series z = ctoda::z0_series(nu, N);
    const Series residual = z - Rational(ctoda::c_nu(nu)) * Series::variable(N) * z.pow(nu) - Series::constant(1, N);
    EXPECT_TRUE(residual.is_zero()) << nu;
  }
}

TEST(WalkSum, GenusZeroIsZ0Derivative) {
  for (int nu = 2; nu <= 5; ++nu) {
    const auto h = HierarchyState::solve(nu, 8, 0);
    EXPECT_EQ(common(ctoda::walk_sum_rhs(nu, h.z(), 0), 7), h.z(0).derivative()) << nu;
  }
}

TEST(WalkSum, ReproducesEveryGenusDerivative) {
  for (int nu = 2; nu <= 4; ++nu) {
    const auto h = HierarchyState::solve(nu, 8, 3);
    for (int g = 0; g <= 3; ++g)
      EXPECT_EQ(common(ctoda::walk_sum_rhs(nu, h.z(), g), 7), h.z(g).derivative()) << nu << " " << g;
  }
}

TEST(WalkSum, EvenInverseLevelPowersVanish) {
  for (int nu = 2; nu <= 4; ++nu) {
    const auto h = HierarchyState::solve(nu, 6, 2);
    const auto terms = ctoda::walk_sum_expansion(nu, h.z(), 6);
    for (int p = 0; p <= 6; p += 2) EXPECT_TRUE(terms[static_cast<size_t>(p)].is_zero()) << nu << " k^-" << p;
  }
}

TEST(WalkSum, MissingGenusIsTruncation) {
  const auto h = HierarchyState::solve(2, 4, 1);
  EXPECT_THROW(ctoda::walk_sum_rhs(2, h.z(), 2), ctoda::TruncationError);
  EXPECT_THROW(ctoda::forcing_series(2, h.z(), 3, ForcingRoute::d_V), ctoda::TruncationError);
}

TEST(Forcing, RoutesAgree) {
  for (int nu = 2; nu <= 4; ++nu) {
    const auto h = HierarchyState::solve(nu, 10, 3);
    for (int g = 1; g <= 3; ++g)
      EXPECT_EQ(ctoda::forcing_series(nu, h.z(), g, ForcingRoute::walk_sum),
                ctoda::forcing_series(nu, h.z(), g, ForcingRoute::d_V))
          << nu << " " << g;
  }
  EXPECT_NO_THROW(HierarchyState::solve(3, 8, 3, true));
}

TEST(Forcing, ReadsOnlyLowerGenera) {
  auto z = HierarchyState::solve(2, 6, 2).z();
  const Series before = ctoda::forcing_series(2, z, 2, ForcingRoute::d_V);
  z[2] = Series({0, 5, 7, 1, 1, 1, 1}, 6);
  EXPECT_EQ(ctoda::forcing_series(2, z, 2, ForcingRoute::d_V), before);
  EXPECT_EQ(ctoda::forcing_series(2, z, 2, ForcingRoute::walk_sum), before);
}

TEST(Forcing, DisagreementNamesCoefficient) {
  try {
    ctoda::require_equal_series(Series({1, 2, 3}, 2), Series({1, 2, 4}, 2), "probe");
    FAIL();
  } catch (const ctoda::ConsistencyError& e) {
    EXPECT_NE(std::string(e.what()).find("s^2"), std::string::npos);
  }
}

TEST(SolveZg, SatisfiesLinearEquation) {
  for (int nu = 2; nu <= 5; ++nu) {
    const int N = 10;
    const auto h = HierarchyState::solve(nu, N, 3);
    const Series& z0 = h.z(0);
    const Rational c(ctoda::c_nu(nu));
    const Series s = Series::variable(N);
    const Series A = c * Rational(nu - 1) * s * z0.pow(nu);
    for (int g = 1; g <= 3; ++g) {
      const Series B = c * (Rational(nu + 1 - 2 * g) * z0.pow(nu) +
                            Rational(nu * (nu - 1)) * s.truncated(N - 1) * z0.pow(nu - 1).truncated(N - 1) * z0.derivative());
      const Series& zg = h.z(g);
      const Series forcing = ctoda::forcing_series(nu, h.z(), g, ForcingRoute::d_V);
      const Series lhs = (Series::constant(1, N) - A).truncated(N - 1) * zg.derivative();
      EXPECT_EQ(lhs, B.truncated(N - 1) * zg.truncated(N - 1) + forcing.truncated(N - 1)) << nu << " " << g;
      EXPECT_TRUE(zg[0].is_zero());
    }
  }
}

TEST(SolveZg, GenusOneAtQuartic) {
  const auto h = HierarchyState::solve(2, 4, 1);
  EXPECT_EQ(h.z(1), Series({0, 0, 96, 10368, 801792}, 4));
}

TEST(SolveZg, TwoLegCountsAreIntegers) {
  for (int nu = 2; nu <= 5; ++nu) {
    const auto h = HierarchyState::solve(nu, 8, 3);
    for (int g = 0; g <= 3; ++g)
      for (int n = 0; n <= 8; ++n) {
        const Rational count = h.z(g)[n] * Rational(ctoda::factorial(n));
        EXPECT_TRUE(count.is_integer() && count.sign() >= 0) << nu << " " << g << " " << n;
      }
  }
}

TEST(Hierarchy, RejectsBadParameters) {
  EXPECT_THROW(HierarchyState::solve(1, 4, 1), ctoda::PreconditionError);
  EXPECT_THROW(HierarchyState::solve(2, 4, -1), ctoda::PreconditionError);
}
