#pragma once

#include <vector>

#include "ctoda/graded.hpp"
#include "ctoda/series.hpp"

namespace ctoda {

// The branch of 1 = z - c_nu s z^nu with z(0) = 1.
Series z0_series(int nu, int order);

enum class ForcingRoute { walk_sum, d_V };

// Coefficients of k^{-p}, p = 0..max_power, of
//   sum_walks [prod_m f(s, 1 + (l_m+1)/k) - prod_m f(s, 1 + l_m/k)]
// where f(s, w) = sum_g k^{-2g} w^{1-2g} z_g(w^{nu-1} s).
std::vector<Series> walk_sum_expansion(int nu, const GradedExpansion& z, int max_power);

// The genus-g part of d/ds f(s, 1) predicted by the walk sum; equals z_g'
// once z_0..z_g are solved.
Series walk_sum_rhs(int nu, const GradedExpansion& z, int genus);

// The part of the genus-g equation that does not involve z_g. Only
// z_0..z_{genus-1} are read.
Series forcing_series(int nu, const GradedExpansion& z, int genus, ForcingRoute route);

// Solves (1 - A) z_g' = B z_g + forcing with z_g(0) = 0, where
// A = c_nu (nu-1) s z_0^nu and B = c_nu((nu+1-2g) z_0^nu + nu(nu-1) s z_0^{nu-1} z_0').
Series solve_zg(int nu, const Series& z0, int genus, const Series& forcing);

class HierarchyState {
 public:
  // Solves z_0..z_G to s-order N. With cross_check set, the forcing is
  // computed by both routes at every genus and any disagreement raises
  // ConsistencyError.
  static HierarchyState solve(int nu, int order, int genus_truncation, bool cross_check = false);

  int nu() const { return nu_; }
  int order() const { return z_.order(); }
  int genus_truncation() const { return z_.genus_truncation(); }
  const GradedExpansion& z() const { return z_; }
  const Series& z(int g) const { return z_[g]; }

 private:
  HierarchyState(int nu, GradedExpansion z) : nu_(nu), z_(std::move(z)) {}
  int nu_;
  GradedExpansion z_;
};

// Raises ConsistencyError naming the first differing coefficient.
void require_equal_series(const Series& a, const Series& b, const std::string& what);

}  // namespace ctoda
