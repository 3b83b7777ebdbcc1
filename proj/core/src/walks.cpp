#include "ctoda/walks.hpp"

#include <algorithm>
#include <numeric>

#include "ctoda/combinatorics.hpp"
#include "ctoda/errors.hpp"

namespace ctoda {

namespace {

using i128 = __int128;

i128 ipow(i128 b, int e) {
  i128 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

i128 small_binomial(int top, int k) {
  if (k < 0 || top < 0 || k > top) return 0;
  i128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * (top - k + i) / i;
  return r;
}

BigInt to_big(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-v) : static_cast<unsigned __int128>(v);
  BigInt r = 0;
  BigInt scale = 1;
  while (u != 0) {
    r += scale * static_cast<unsigned long>(u % 1000000000u);
    scale *= 1000000000ul;
    u /= 1000000000u;
  }
  return neg ? BigInt(-r) : r;
}

// Sum over i_1<...<i_rho <= 2nu and m_1<...<m_rho <= nu+1 of the walk-count
// weight times the difference of the two level products, for one ordering
// of the parts.
struct PreimageSum {
  int nu;
  const std::vector<int>& exps;
  i128 total = 0;

  void run() { step(0, 0, 0, 1, 1, 1); }

  void step(size_t idx, int prev_i, int prev_m, i128 weight, i128 upper, i128 lower) {
    const int rho = static_cast<int>(exps.size());
    if (static_cast<int>(idx) == rho) {
      const i128 tail = small_binomial(2 * nu - prev_i, nu + 1 - prev_m);
      total += weight * tail * (upper - lower);
      return;
    }
    const int remaining = rho - static_cast<int>(idx);
    for (int i = prev_i + 1; i <= 2 * nu - remaining + 1; ++i) {
      for (int m = prev_m + 1; m <= nu + 1 - remaining + 1; ++m) {
        const i128 w = small_binomial(i - prev_i - 1, m - prev_m - 1);
        if (w == 0) continue;
        step(idx + 1, i, m, weight * w, upper * ipow(i - 2 * m + 2, exps[idx]), lower * ipow(i - 2 * m + 1, exps[idx]));
      }
    }
  }
};

}  // namespace

std::vector<Walk> enumerate_walks(int nu) {
  if (nu < 1) throw PreconditionError("enumerate_walks: nu must be at least 1");
  std::vector<Walk> out;
  std::vector<int> pos(static_cast<size_t>(nu) + 1);
  std::iota(pos.begin(), pos.end(), 1);
  const int top = 2 * nu;
  while (true) {
    Walk w{pos, {}};
    for (size_t m = 0; m < pos.size(); ++m) w.levels.push_back(pos[m] - 2 * static_cast<int>(m) - 1);
    out.push_back(std::move(w));
    // Next combination in lexicographic order.
    int k = static_cast<int>(pos.size()) - 1;
    while (k >= 0 && pos[static_cast<size_t>(k)] == top - (static_cast<int>(pos.size()) - 1 - k)) --k;
    if (k < 0) break;
    ++pos[static_cast<size_t>(k)];
    for (size_t j = static_cast<size_t>(k) + 1; j < pos.size(); ++j) pos[j] = pos[j - 1] + 1;
  }
  return out;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw PreconditionError("Partition: no parts");
  if (std::any_of(parts_.begin(), parts_.end(), [](int p) { return p <= 0; }))
    throw PreconditionError("Partition: parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::multiplicity(int j) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), j)); }

Rational d_V_coefficient(int nu, const Partition& v) {
  if (nu < 1) throw PreconditionError("d_V_coefficient: nu must be at least 1");
  if (v.length() > nu + 1) return Rational(0);
  // Distinct orderings of the parts stand in for the symmetric-group sum
  // divided by prod_j r_j!.
  std::vector<int> order = v.parts();
  std::sort(order.begin(), order.end());
  i128 total = 0;
  do {
    PreimageSum sum{nu, order};
    sum.run();
    total += sum.total;
  } while (std::next_permutation(order.begin(), order.end()));
  return Rational(to_big(total));
}

Rational forcing_monomial_coefficient(int nu, const Partition& v) {
  Rational denom = 1;
  for (int part : v.parts()) denom *= Rational(factorial(part));
  return d_V_coefficient(nu, v) / denom;
}

}  // namespace ctoda
