#pragma once

#include "ctoda/series.hpp"

namespace ctoda {

// Power series in (s1, s2) truncated at total degree N.
class BivariateSeries {
 public:
  explicit BivariateSeries(int order);

  int order() const { return order_; }
  // Coefficient of s1^i s2^j, i + j <= order.
  const Rational& operator()(int i, int j) const;
  Rational& operator()(int i, int j);

  BivariateSeries swapped() const;
  // The s2 = 0 slice as a univariate series in s1.
  Series slice_s1() const;

  friend BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b);
  friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;
  BivariateSeries pow(int p) const;

 private:
  size_t index(int i, int j) const;
  int order_;
  std::vector<Rational> c_;
};

// The branch of 1 = z - c_{nu1} s1 z^{nu1} - c_{nu2} s2 z^{nu2} with z(0,0) = 1.
BivariateSeries two_time_z0(int nu1, int nu2, int order);

}  // namespace ctoda
