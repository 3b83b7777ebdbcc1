#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "ctoda/combinatorics.hpp"
#include "ctoda/eg.hpp"
#include "ctoda/errors.hpp"
#include "ctoda/oracle.hpp"
#include "ctoda/toda.hpp"
#include "generators.hpp"

namespace oracle = ctoda::oracle;
using ctoda::BigInt;
using ctoda::Rational;

namespace {

BigInt as_big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

std::uint64_t connected(const oracle::MapCensus& c) { return c.total - c.disconnected; }

}  // namespace

TEST(Census, SingleQuarticVertex) {
  const auto c = oracle::census({2, 1, 0});
  EXPECT_EQ(c.total, 3u);
  EXPECT_EQ(c.disconnected, 0u);
  EXPECT_EQ(c.count(0), 2u);
  EXPECT_EQ(c.count(1), 1u);
  EXPECT_EQ(c.by_genus.size(), 2u);
}

TEST(Census, TableRows) {
  EXPECT_EQ(oracle::census({2, 3, 0}).count(2), 1440u);
  EXPECT_EQ(oracle::census({4, 1, 0}).count(2), 21u);
  EXPECT_EQ(oracle::census({2, 2, 0}).count(0), 36u);
  EXPECT_EQ(oracle::census({6, 1, 0}).count(3), 1485u);
}

TEST(Census, TotalsAreMatchingCounts) {
  for (const oracle::OracleTask t : {oracle::OracleTask{2, 2, 0}, oracle::OracleTask{3, 2, 0}, oracle::OracleTask{2, 2, 2},
                                     oracle::OracleTask{5, 1, 2}})
    EXPECT_EQ(as_big(oracle::census(t).total), oracle::matching_count(t.darts()));
  EXPECT_EQ(oracle::matching_count(8), 105);
  EXPECT_THROW(oracle::matching_count(7), ctoda::PreconditionError);
}

TEST(Census, DisconnectedPairsComposeFromSmaller) {
  // Exponential formula over set partitions of the labelled vertices:
  // T(n) = sum over partitions of prod C(block). With C = connected counts.
  for (int nu = 2; nu <= 3; ++nu) {
    const int max_n = nu == 2 ? 4 : 2;
    std::vector<BigInt> C(static_cast<size_t>(max_n) + 1);
    for (int n = 1; n <= max_n; ++n) {
      const auto c = oracle::census({nu, n, 0});
      C[static_cast<size_t>(n)] = as_big(connected(c));
      // Partitions with the block of vertex 1 of size k: binom(n-1, k-1) C(k) T(n-k).
      std::vector<BigInt> T(static_cast<size_t>(n) + 1);
      T[0] = 1;
      for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= m; ++k)
          T[static_cast<size_t>(m)] += ctoda::binomial(m - 1, k - 1) * C[static_cast<size_t>(k)] * T[static_cast<size_t>(m - k)];
      EXPECT_EQ(T[static_cast<size_t>(n)], as_big(c.total)) << nu << " " << n;
    }
  }
  const auto two = oracle::census({2, 2, 0});
  EXPECT_EQ(two.total, 105u);
  EXPECT_EQ(two.disconnected, 9u);
  EXPECT_EQ(two.count(1), 60u);
}

TEST(TwoLeg, Counts) {
  const auto one = oracle::two_leg_census(2, 1);
  EXPECT_EQ(one.count(0), 12u);
  for (const auto& [g, c] : one.by_genus)
    if (g >= 1) {
      EXPECT_EQ(c, 0u);
    }
  EXPECT_EQ(oracle::two_leg_census(2, 2).count(1), 192u);
}

TEST(TwoLeg, MatchesToda) {
  const auto h = ctoda::HierarchyState::solve(2, 3, 1);
  for (int n = 1; n <= 3; ++n) {
    const auto c = oracle::two_leg_census(2, n);
    for (int g = 0; g <= 1; ++g)
      EXPECT_EQ(Rational(as_big(c.count(g))), h.z(g)[n] * Rational(ctoda::factorial(n))) << g << " " << n;
  }
}

TEST(Census, MatchesFreeEnergyCounts) {
  struct Case {
    int nu;
    int max_n;
  };
  for (const Case cs : {Case{2, 4}, Case{3, 2}, Case{4, 2}, Case{5, 1}, Case{6, 1}, Case{7, 1}}) {
    const int G = cs.nu * cs.max_n;  // genus bound for the largest census
    const auto eg = ctoda::EgState::solve(ctoda::HierarchyState::solve(cs.nu, cs.max_n, std::min(G, 4)), std::min(G, 4));
    for (int n = 1; n <= cs.max_n; ++n) {
      const auto c = oracle::census({cs.nu, n, 0});
      for (int g = 0; g <= std::min(G, 4); ++g) EXPECT_EQ(as_big(c.count(g)), eg.kappa(g, n)) << cs.nu << " " << n << " " << g;
      for (const auto& [g, count] : c.by_genus) EXPECT_LE(g, 4) << "census genus beyond the solved range";
    }
  }
}

TEST(Census, ThreadCountIndependence) {
  const oracle::OracleTask task{2, 3, 0};
  const auto one = oracle::census(task, {1, false, 100'000'000});
  for (unsigned t : {2u, 3u, 8u}) {
    const auto many = oracle::census(task, {t, false, 100'000'000});
    EXPECT_EQ(many.by_genus, one.by_genus) << t;
    EXPECT_EQ(many.disconnected, one.disconnected);
    EXPECT_EQ(many.total, one.total);
  }
}

TEST(Census, ConjugationInvariance) {
  for (const oracle::OracleTask task : {oracle::OracleTask{2, 2, 0}, oracle::OracleTask{2, 2, 2}, oracle::OracleTask{3, 1, 2}}) {
    const auto sigma = oracle::standard_rotation(task);
    const auto base = oracle::census(task);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<int> relabel(sigma.size());
      std::iota(relabel.begin(), relabel.end(), 0);
      std::shuffle(relabel.begin(), relabel.end(), gen::engine());
      std::vector<int> conjugated(sigma.size());
      for (size_t d = 0; d < sigma.size(); ++d)
        conjugated[static_cast<size_t>(relabel[d])] = relabel[static_cast<size_t>(sigma[d])];
      const auto c = oracle::census_with_rotation(task, conjugated);
      EXPECT_EQ(c.by_genus, base.by_genus);
      EXPECT_EQ(c.disconnected, base.disconnected);
    }
  }
}

TEST(Census, RejectsBadTasks) {
  EXPECT_THROW(oracle::census({2, 0, 0}), ctoda::PreconditionError);
  EXPECT_THROW(oracle::census({2, 1, 1}), ctoda::PreconditionError);
  const std::vector<int> not_a_permutation{0, 0, 1, 2};
  EXPECT_THROW(oracle::census_with_rotation({2, 1, 0}, not_a_permutation), ctoda::PreconditionError);
}

TEST(Census, BudgetRefusal) {
  try {
    oracle::census({2, 5, 0});
    FAIL();
  } catch (const ctoda::BudgetExceededError& e) {
    EXPECT_EQ(e.estimate(), "654729075");
  }
  EXPECT_THROW(oracle::census({2, 3, 0}, {1, false, 1000}), ctoda::BudgetExceededError);
  EXPECT_NO_THROW(oracle::census({2, 3, 0}, {1, true, 1000}));
}

TEST(EulerGenus, Examples) {
  EXPECT_EQ(oracle::euler_genus(1, 2, 3), 0);
  EXPECT_EQ(oracle::euler_genus(1, 2, 1), 1);
  EXPECT_EQ(oracle::euler_genus(3, 6, 1), 2);
  EXPECT_FALSE(oracle::euler_genus(1, 2, 2).has_value());
  EXPECT_FALSE(oracle::euler_genus(1, 2, 5).has_value());
  EXPECT_FALSE(oracle::euler_genus(1, 2, 0).has_value());
}
