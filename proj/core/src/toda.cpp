#include "ctoda/toda.hpp"

#include <map>

#include "ctoda/combinatorics.hpp"
#include "ctoda/errors.hpp"
#include "ctoda/monomial_series.hpp"
#include "ctoda/walks.hpp"

namespace ctoda {

namespace {

void require_nu(int nu) {
  if (nu < 2) throw PreconditionError("nu must be at least 2");
}

using KSeries = std::vector<Series>;  // coefficients of k^0, k^-1, ...

KSeries k_product(const KSeries& a, const KSeries& b) {
  const int order = a.front().order();
  KSeries r(a.size(), Series(order));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; i + j < r.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

// f(s, 1 + L/k) expanded in 1/k through k^{-max_power}.
KSeries shifted_scheme(int nu, const GradedExpansion& z, int level, int max_power) {
  const int order = z.order();
  KSeries out(static_cast<size_t>(max_power) + 1, Series(order));
  for (int g = 0; g <= z.genus_truncation() && 2 * g <= max_power; ++g) {
    for (int n = 0; n <= order; ++n) {
      const Rational& c = z[g][n];
      if (c.is_zero()) continue;
      const long e = static_cast<long>(nu - 1) * n + 1 - 2 * g;
      Rational lpow = 1;
      for (int j = 0; 2 * g + j <= max_power; ++j) {
        out[static_cast<size_t>(2 * g + j)][n] += c * Rational(binomial(e, j)) * lpow;
        lpow *= Rational(level);
      }
    }
  }
  return out;
}

}  // namespace

Series z0_series(int nu, int order) {
  require_nu(nu);
  if (order < 0) throw PreconditionError("z0_series: negative order");
  const Rational c(c_nu(nu));
  Series z = Series::constant(1, order);
  // Each pass fixes one more coefficient.
  for (int pass = 0; pass < order; ++pass) {
    Series next = (z.pow(nu) * c).shifted(1);
    next[0] += Rational(1);
    z = std::move(next);
  }
  return z;
}

std::vector<Series> walk_sum_expansion(int nu, const GradedExpansion& z, int max_power) {
  require_nu(nu);
  if (max_power < 0) throw PreconditionError("walk_sum_expansion: negative power");
  std::map<int, KSeries> cache;
  auto factor = [&](int level) -> const KSeries& {
    auto it = cache.find(level);
    if (it == cache.end()) it = cache.emplace(level, shifted_scheme(nu, z, level, max_power)).first;
    return it->second;
  };
  KSeries total(static_cast<size_t>(max_power) + 1, Series(z.order()));
  for (const Walk& w : enumerate_walks(nu)) {
    KSeries upper = factor(w.levels.front() + 1);
    KSeries lower = factor(w.levels.front());
    for (size_t m = 1; m < w.levels.size(); ++m) {
      upper = k_product(upper, factor(w.levels[m] + 1));
      lower = k_product(lower, factor(w.levels[m]));
    }
    for (size_t p = 0; p < total.size(); ++p) total[p] += upper[p] - lower[p];
  }
  return total;
}

Series walk_sum_rhs(int nu, const GradedExpansion& z, int genus) {
  if (genus < 0 || genus > z.genus_truncation())
    throw TruncationError("walk_sum_rhs: genus " + std::to_string(genus) + " not present");
  std::vector<Series> slots;
  for (int g = 0; g <= genus; ++g) slots.push_back(z[g]);
  // The overall factor k turns k^{-(2g+1)} into k^{-2g}.
  return walk_sum_expansion(nu, GradedExpansion(std::move(slots)), 2 * genus + 1)[static_cast<size_t>(2 * genus + 1)];
}

Series forcing_series(int nu, const GradedExpansion& z, int genus, ForcingRoute route) {
  require_nu(nu);
  if (genus < 1) throw PreconditionError("forcing_series: genus must be at least 1");
  if (genus - 1 > z.genus_truncation()) throw TruncationError("forcing_series: lower genera not solved");
  std::vector<Series> slots;
  for (int g = 0; g <= genus; ++g) slots.push_back(g < genus ? z[g] : Series(z.order()));
  const GradedExpansion lower(std::move(slots));
  if (route == ForcingRoute::walk_sum) return walk_sum_rhs(nu, lower, genus);

  const MonomialSeries scheme = MonomialSeries::scheme(lower, nu);
  std::vector<GradedExpansion> scaled_derivs;  // f_{w^(j)} / j!
  for (int j = 0; j <= 2 * genus + 1; ++j)
    scaled_derivs.push_back(scheme.w_derivative_at_one(j) * (Rational(1) / Rational(factorial(j))));
  std::vector<GradedExpansion> f_powers{scaled_derivs[0].pow(0)};
  for (int p = 1; p <= nu; ++p) f_powers.push_back(f_powers.back() * scaled_derivs[0]);

  Series total(z.order());
  for (int l = 0; l <= genus; ++l) {
    for (const auto& parts : integer_partitions(2 * l + 1)) {
      const Partition v(parts);
      if (v.length() > nu + 1) continue;
      const Rational d = d_V_coefficient(nu, v);
      if (d.is_zero()) continue;
      GradedExpansion term = f_powers[static_cast<size_t>(nu + 1 - v.length())];
      for (int part : v.parts()) term = term * scaled_derivs[static_cast<size_t>(part)];
      total += term[genus - l] * d;
    }
  }
  return total;
}

Series solve_zg(int nu, const Series& z0, int genus, const Series& forcing) {
  require_nu(nu);
  if (genus < 1) throw PreconditionError("solve_zg: genus must be at least 1");
  const int order = std::min(z0.order(), forcing.order() + 1);
  const Rational c(c_nu(nu));
  const Series s = Series::variable(order);
  const Series z0n = z0.truncated(order).pow(nu);
  const Series z0n1 = z0.truncated(order).pow(nu - 1);
  const Series dz0 = z0.derivative();
  const Series a = s * z0n * (c * Rational(nu - 1));
  Series b = z0n * (c * Rational(nu + 1 - 2 * genus));
  b += (s.truncated(order - 1) * z0n1.truncated(order - 1) * dz0) * (c * Rational(static_cast<long>(nu) * (nu - 1)));
  Series out(order);
  for (int n = 0; n + 1 <= order; ++n) {
    Rational rhs = forcing[n];
    for (int k = 1; k <= n; ++k) rhs += a[k] * Rational(n - k + 1) * out[n - k + 1];
    for (int k = 0; k <= n; ++k) rhs += b[k] * out[n - k];
    out[n + 1] = rhs / Rational(n + 1);
  }
  return out;
}

void require_equal_series(const Series& a, const Series& b, const std::string& what) {
  const int order = std::min(a.order(), b.order());
  for (int n = 0; n <= order; ++n)
    if (a[n] != b[n])
      throw ConsistencyError(what + ": coefficient of s^" + std::to_string(n) + " differs (" + a[n].str() +
                             " vs " + b[n].str() + ")");
}

HierarchyState HierarchyState::solve(int nu, int order, int genus_truncation, bool cross_check) {
  require_nu(nu);
  if (genus_truncation < 0) throw PreconditionError("HierarchyState: negative genus truncation");
  GradedExpansion z(genus_truncation, order);
  z[0] = z0_series(nu, order);
  for (int g = 1; g <= genus_truncation; ++g) {
    const Series forcing = forcing_series(nu, z, g, ForcingRoute::d_V);
    if (cross_check)
      require_equal_series(forcing, forcing_series(nu, z, g, ForcingRoute::walk_sum),
                           "forcing routes at genus " + std::to_string(g));
    z[g] = solve_zg(nu, z[0], g, forcing);
  }
  return HierarchyState(nu, std::move(z));
}

}  // namespace ctoda
