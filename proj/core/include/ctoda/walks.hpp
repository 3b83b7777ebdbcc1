#pragma once

#include <vector>

#include "ctoda/rational.hpp"

namespace ctoda {

// A lattice path of 2 nu unit steps from +1 to -1, recorded by the steps at
// which it goes down. level[m] is the lattice height just before the m-th
// down step, shifted so that the walk contributes factors at 1 + level/k.
struct Walk {
  std::vector<int> downturns;  // strictly increasing, values in 1..2nu
  std::vector<int> levels;     // levels[m] = downturns[m] - 2m - 1 (0-based m)
};

// All binom(2nu, nu+1) walks, downturn positions in lexicographic order.
std::vector<Walk> enumerate_walks(int nu);

// A partition of 2g+1, parts in non-increasing order.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  // Number of parts equal to j.
  int multiplicity(int j) const;

 private:
  std::vector<int> parts_;
};

// Weight of the monomial f^{nu+1-rho} prod_i f_{w^(V_i)} in the walk-sum
// expansion, via the binomial pre-image sum over downturn positions. Zero
// when the partition has more than nu+1 parts.
Rational d_V_coefficient(int nu, const Partition& v);

// d_V / prod_j (j!)^{r_j}: the coefficient multiplying
// f^{nu+1-rho} prod_i (f_{w^(V_i)}) in the forcing.
Rational forcing_monomial_coefficient(int nu, const Partition& v);

}  // namespace ctoda
