#include "ctoda/monomial_series.hpp"

#include <algorithm>

#include "ctoda/combinatorics.hpp"
#include "ctoda/errors.hpp"

namespace ctoda {

void MonomialSeries::add(Key k, const Rational& c) {
  if (c.is_zero() || k.genus > G_ || k.s_power > N_) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MonomialSeries MonomialSeries::scheme(const GradedExpansion& z, int nu, int base) {
  MonomialSeries m(z.genus_truncation(), z.order());
  for (int g = 0; g <= z.genus_truncation(); ++g)
    for (int n = 0; n <= z.order(); ++n) m.add({g, n, (nu - 1) * n + base - 2 * g}, z[g][n]);
  return m;
}

MonomialSeries MonomialSeries::rescaled(const Series& a, int nu, int base, int genus, int genus_truncation) {
  MonomialSeries m(genus_truncation, a.order());
  for (int n = 0; n <= a.order(); ++n) m.add({genus, n, (nu - 1) * n + base}, a[n]);
  return m;
}

MonomialSeries& MonomialSeries::operator+=(const MonomialSeries& o) {
  G_ = std::min(G_, o.G_);
  N_ = std::min(N_, o.N_);
  std::erase_if(terms_, [&](const auto& kv) { return kv.first.genus > G_ || kv.first.s_power > N_; });
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

MonomialSeries operator*(const MonomialSeries& a, const MonomialSeries& b) {
  MonomialSeries r(std::min(a.G_, b.G_), std::min(a.N_, b.N_));
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add({ka.genus + kb.genus, ka.s_power + kb.s_power, ka.w_exponent + kb.w_exponent}, ca * cb);
  return r;
}

MonomialSeries MonomialSeries::w_derivative(int j) const {
  if (j < 0) throw PreconditionError("w_derivative: negative order");
  MonomialSeries r(G_, N_);
  for (const auto& [k, c] : terms_)
    r.add({k.genus, k.s_power, k.w_exponent - j}, c * Rational(falling_factorial(k.w_exponent, j)));
  return r;
}

GradedExpansion MonomialSeries::w_derivative_at_one(int j) const {
  if (j < 0) throw PreconditionError("w_derivative_at_one: negative order");
  GradedExpansion r(G_, N_);
  for (const auto& [k, c] : terms_) r[k.genus][k.s_power] += c * Rational(falling_factorial(k.w_exponent, j));
  return r;
}

}  // namespace ctoda
