#pragma once

#include <vector>

#include "ctoda/series.hpp"

namespace ctoda {

// sum_{g=0}^{G} h^g S_g(s) with h = k^{-2}: a power series in the genus
// parameter whose coefficients are truncated series in s. Every slot shares
// one s-truncation order.
class GradedExpansion {
 public:
  GradedExpansion(int genus_truncation, int order);
  explicit GradedExpansion(std::vector<Series> per_genus);

  int genus_truncation() const { return static_cast<int>(slots_.size()) - 1; }
  int order() const { return slots_.front().order(); }

  const Series& operator[](int g) const;
  Series& operator[](int g);

  // Copy with slots g >= from set to zero.
  GradedExpansion below(int from) const;

  GradedExpansion& operator+=(const GradedExpansion& o);
  GradedExpansion& operator-=(const GradedExpansion& o);
  GradedExpansion& operator*=(const Rational& k);

  friend GradedExpansion operator+(GradedExpansion a, const GradedExpansion& b) { return a += b; }
  friend GradedExpansion operator-(GradedExpansion a, const GradedExpansion& b) { return a -= b; }
  friend GradedExpansion operator*(GradedExpansion a, const Rational& k) { return a *= k; }
  friend GradedExpansion operator*(const GradedExpansion& a, const GradedExpansion& b);
  friend bool operator==(const GradedExpansion& a, const GradedExpansion& b) = default;

  GradedExpansion pow(int p) const;

 private:
  std::vector<Series> slots_;
};

// log(sum_g h^g b_g), regrouped by powers of h. Requires b[0][0] == 1.
GradedExpansion graded_log(const GradedExpansion& b);
// Inverse of graded_log: requires the genus-0 slot to have zero constant term.
GradedExpansion graded_exp(const GradedExpansion& l);

}  // namespace ctoda
