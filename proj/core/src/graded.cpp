#include "ctoda/graded.hpp"

#include <algorithm>

#include "ctoda/errors.hpp"

namespace ctoda {

GradedExpansion::GradedExpansion(int genus_truncation, int order) {
  if (genus_truncation < 0) throw PreconditionError("GradedExpansion: negative genus truncation");
  slots_.assign(static_cast<size_t>(genus_truncation) + 1, Series(order));
}

GradedExpansion::GradedExpansion(std::vector<Series> per_genus) : slots_(std::move(per_genus)) {
  if (slots_.empty()) throw PreconditionError("GradedExpansion: no genus slots");
  const int n = std::min_element(slots_.begin(), slots_.end(), [](const Series& a, const Series& b) {
                  return a.order() < b.order();
                })->order();
  for (auto& s : slots_) s = s.truncated(n);
}

const Series& GradedExpansion::operator[](int g) const {
  if (g < 0 || g > genus_truncation())
    throw TruncationError("GradedExpansion: genus " + std::to_string(g) + " beyond truncation " +
                          std::to_string(genus_truncation()));
  return slots_[static_cast<size_t>(g)];
}

Series& GradedExpansion::operator[](int g) {
  if (g < 0 || g > genus_truncation())
    throw TruncationError("GradedExpansion: genus " + std::to_string(g) + " beyond truncation " +
                          std::to_string(genus_truncation()));
  return slots_[static_cast<size_t>(g)];
}

GradedExpansion GradedExpansion::below(int from) const {
  GradedExpansion r = *this;
  for (int g = std::max(from, 0); g <= genus_truncation(); ++g) r.slots_[static_cast<size_t>(g)] = Series(order());
  return r;
}

GradedExpansion& GradedExpansion::operator+=(const GradedExpansion& o) {
  const int G = std::min(genus_truncation(), o.genus_truncation());
  slots_.resize(static_cast<size_t>(G) + 1);
  for (int g = 0; g <= G; ++g) slots_[static_cast<size_t>(g)] += o.slots_[static_cast<size_t>(g)];
  return *this;
}

GradedExpansion& GradedExpansion::operator-=(const GradedExpansion& o) {
  const int G = std::min(genus_truncation(), o.genus_truncation());
  slots_.resize(static_cast<size_t>(G) + 1);
  for (int g = 0; g <= G; ++g) slots_[static_cast<size_t>(g)] -= o.slots_[static_cast<size_t>(g)];
  return *this;
}

GradedExpansion& GradedExpansion::operator*=(const Rational& k) {
  for (auto& s : slots_) s *= k;
  return *this;
}

GradedExpansion operator*(const GradedExpansion& a, const GradedExpansion& b) {
  const int G = std::min(a.genus_truncation(), b.genus_truncation());
  const int n = std::min(a.order(), b.order());
  GradedExpansion r(G, n);
  for (int i = 0; i <= G; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= G; ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

GradedExpansion GradedExpansion::pow(int p) const {
  if (p < 0) throw PreconditionError("GradedExpansion: negative power");
  GradedExpansion result(genus_truncation(), order());
  result[0] = Series::constant(1, order());
  for (int i = 0; i < p; ++i) result = result * *this;
  return result;
}

GradedExpansion graded_log(const GradedExpansion& b) {
  if (b[0][0] != Rational(1)) throw PreconditionError("graded_log: genus-0 constant term must be 1");
  const int G = b.genus_truncation();
  const int n = b.order();
  // log(b0 (1 + U)) = log b0 + sum_m (-1)^{m+1} U^m / m, U = sum_{g>=1} h^g b_g / b0.
  const Series inv0 = b[0].inverse();
  GradedExpansion u(G, n);
  for (int g = 1; g <= G; ++g) u[g] = b[g] * inv0;
  GradedExpansion result(G, n);
  result[0] = log(b[0]);
  GradedExpansion power = u;
  for (int m = 1; m <= G; ++m) {
    const Rational coeff = Rational(m % 2 == 1 ? 1 : -1, m);
    result += power * coeff;
    power = power * u;
  }
  return result;
}

GradedExpansion graded_exp(const GradedExpansion& l) {
  const int G = l.genus_truncation();
  const int n = l.order();
  const Series e0 = exp(l[0]);
  GradedExpansion nil = l.below(G + 1);
  nil[0] = Series(n);
  GradedExpansion result(G, n);
  result[0] = Series::constant(1, n);
  GradedExpansion power = nil;
  Rational inv_fact = 1;
  for (int m = 1; m <= G; ++m) {
    inv_fact /= Rational(m);
    result += power * inv_fact;
    power = power * nil;
  }
  for (int g = 0; g <= G; ++g) result[g] = result[g] * e0;
  return result;
}

}  // namespace ctoda
