#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ctoda/oracle.hpp"
#include "ctoda/toda.hpp"

// Genus-g free energies, worked with as e_hat_g(s) = e_g(-s) so that
// n! [s^n] e_hat_g counts connected g-maps with n labelled 2nu-valent
// vertices.
namespace ctoda {

// lambda_n = ((nu-1)n + 2 - 2g)((nu-1)n + 1 - 2g), the multiplier of a_n.
Rational lambda_n(int nu, int genus, int n);
// Orders 0 <= n <= max_order where lambda_n vanishes.
std::vector<int> resonant_orders(int nu, int genus, int max_order);

enum class ConstantSource { table, oracle, user };
std::string to_string(ConstantSource s);

// The map count n! a_n at a resonant order, and where it came from.
struct ResonantValue {
  int n;
  BigInt count;
  ConstantSource source;
};

struct Resonance {
  int genus;
  int nu;
  std::vector<ResonantValue> values;
};

// Built-in map counts at the resonant orders, for genus <= 3.
std::optional<BigInt> tabulated_constant(int genus, int nu, int n);

struct EgOptions {
  // (genus, n) -> map count supplied by the caller; takes precedence.
  std::map<std::pair<int, int>, BigInt> user_constants;
  bool use_oracle = true;
  oracle::CensusOptions census;
};

// -sum_{m=1}^{g} 2/(2m+2)! d_w^{2m+2}[w^{2-2(g-m)} e_hat_{g-m}(w^{nu-1} s)] at w = 1,
// plus the genus-g slot of log(sum_g h^g z_g). Reads e_hat[0..g-1].
Series drivers(int nu, const std::vector<Series>& e_hat, const GradedExpansion& log_z, int genus);

class EgState {
 public:
  // Solves e_hat_0..e_hat_G from a hierarchy with at least G genera.
  // Throws UnresolvedConstantError when a resonant constant has no source
  // and ConsistencyError when solvability fails at a resonance.
  static EgState solve(const HierarchyState& z, int genus_truncation, const EgOptions& options = {});

  int nu() const { return nu_; }
  int order() const { return e_hat_.front().order(); }
  int genus_truncation() const { return static_cast<int>(e_hat_.size()) - 1; }
  const Series& e_hat(int g) const { return e_hat_.at(static_cast<size_t>(g)); }
  const Series& drivers_of(int g) const { return drivers_.at(static_cast<size_t>(g)); }
  const Resonance& resonance(int g) const { return resonances_.at(static_cast<size_t>(g)); }

  // n! [s^n] e_hat_g, checked to be a nonnegative integer.
  BigInt kappa(int g, int n) const;

 private:
  EgState() = default;
  int nu_ = 2;
  std::vector<Series> e_hat_;
  std::vector<Series> drivers_;
  std::vector<Resonance> resonances_;
};

}  // namespace ctoda
