#include "ctoda/eg.hpp"

#include "ctoda/combinatorics.hpp"
#include "ctoda/errors.hpp"
#include "ctoda/monomial_series.hpp"

namespace ctoda {

Rational lambda_n(int nu, int genus, int n) {
  const long a = static_cast<long>(nu - 1) * n;
  return Rational((a + 2 - 2 * genus) * (a + 1 - 2 * genus));
}

std::vector<int> resonant_orders(int nu, int genus, int max_order) {
  std::vector<int> out;
  for (int n = 0; n <= max_order; ++n)
    if (lambda_n(nu, genus, n).is_zero()) out.push_back(n);
  return out;
}

std::string to_string(ConstantSource s) {
  switch (s) {
    case ConstantSource::table: return "table";
    case ConstantSource::oracle: return "oracle";
    case ConstantSource::user: return "user";
  }
  return "unknown";
}

std::optional<BigInt> tabulated_constant(int genus, int nu, int n) {
  struct Entry {
    int genus, nu, n;
    const char* count;
  };
  static const Entry table[] = {
      {1, 2, 1, "1"},    {2, 2, 2, "0"},    {2, 2, 3, "1440"}, {2, 3, 1, "0"},
      {2, 4, 1, "21"},   {3, 2, 4, "0"},    {3, 2, 5, "58060800"},
      {3, 3, 2, "0"},    {3, 5, 1, "0"},    {3, 6, 1, "1485"},
  };
  if (genus == 1 && n == 0) return BigInt(0);
  for (const auto& e : table)
    if (e.genus == genus && e.nu == nu && e.n == n) return BigInt(e.count);
  return std::nullopt;
}

Series drivers(int nu, const std::vector<Series>& e_hat, const GradedExpansion& log_z, int genus) {
  if (genus < 0 || static_cast<int>(e_hat.size()) < genus) throw PreconditionError("drivers: lower genera missing");
  Series out = log_z[genus];
  for (int m = 1; m <= genus; ++m) {
    const int lower = genus - m;
    const MonomialSeries term = MonomialSeries::rescaled(e_hat[static_cast<size_t>(lower)], nu, 2 - 2 * lower, 0, 0);
    const Rational weight = Rational(-2) / Rational(factorial(2 * m + 2));
    out += term.w_derivative_at_one(2 * m + 2)[0] * weight;
  }
  return out;
}

EgState EgState::solve(const HierarchyState& z, int genus_truncation, const EgOptions& options) {
  if (genus_truncation < 0 || genus_truncation > z.genus_truncation())
    throw PreconditionError("EgState: genus truncation exceeds the solved hierarchy");
  const int nu = z.nu();
  const int order = z.order();
  std::vector<Series> slots;
  for (int g = 0; g <= genus_truncation; ++g) slots.push_back(z.z(g));
  const GradedExpansion log_z = graded_log(GradedExpansion(std::move(slots)));

  EgState st;
  st.nu_ = nu;
  for (int g = 0; g <= genus_truncation; ++g) {
    const Series drv = drivers(nu, st.e_hat_, log_z, g);
    Resonance res{g, nu, {}};
    Series a(order);
    for (int n = 0; n <= order; ++n) {
      const Rational lam = lambda_n(nu, g, n);
      if (!lam.is_zero()) {
        a[n] = drv[n] / lam;
        continue;
      }
      if (!drv[n].is_zero())
        throw ConsistencyError("genus " + std::to_string(g) + ", nu " + std::to_string(nu) +
                               ": driver coefficient at resonant order " + std::to_string(n) + " is " + drv[n].str());
      std::optional<ResonantValue> value;
      if (const auto it = options.user_constants.find({g, n}); it != options.user_constants.end()) {
        value = ResonantValue{n, it->second, ConstantSource::user};
      } else if (const auto t = tabulated_constant(g, nu, n)) {
        value = ResonantValue{n, *t, ConstantSource::table};
      } else if (options.use_oracle && n >= 1) {
        try {
          const auto c = oracle::census(oracle::OracleTask{nu, n, 0}, options.census);
          value = ResonantValue{n, BigInt(static_cast<unsigned long>(c.count(g))), ConstantSource::oracle};
        } catch (const BudgetExceededError& e) {
          throw UnresolvedConstantError(g, nu, n,
                                        "resonant constant at genus " + std::to_string(g) + ", nu " + std::to_string(nu) +
                                            ", order " + std::to_string(n) + " is not tabulated and the map census needs " +
                                            e.estimate() + " matchings");
        }
      }
      if (!value)
        throw UnresolvedConstantError(g, nu, n,
                                      "no source for the resonant constant at genus " + std::to_string(g) + ", nu " +
                                          std::to_string(nu) + ", order " + std::to_string(n));
      a[n] = Rational(value->count) / Rational(factorial(n));
      res.values.push_back(*value);
    }
    st.e_hat_.push_back(std::move(a));
    st.drivers_.push_back(drv);
    st.resonances_.push_back(std::move(res));
  }
  return st;
}

BigInt EgState::kappa(int g, int n) const {
  const Rational k = e_hat(g)[n] * Rational(factorial(n));
  if (!k.is_integer() || k.sign() < 0)
    throw ConsistencyError("map count at genus " + std::to_string(g) + ", order " + std::to_string(n) + " is " + k.str());
  return k.numerator();
}

}  // namespace ctoda
