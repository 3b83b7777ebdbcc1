#include "ctoda/two_time.hpp"

#include <algorithm>

#include "ctoda/combinatorics.hpp"
#include "ctoda/errors.hpp"

namespace ctoda {

BivariateSeries::BivariateSeries(int order) : order_(order) {
  if (order < 0) throw PreconditionError("BivariateSeries: negative order");
  c_.resize(static_cast<size_t>((order + 1) * (order + 2) / 2));
}

size_t BivariateSeries::index(int i, int j) const {
  if (i < 0 || j < 0 || i + j > order_)
    throw TruncationError("BivariateSeries: degree " + std::to_string(i + j) + " beyond order " + std::to_string(order_));
  const int d = i + j;
  return static_cast<size_t>(d * (d + 1) / 2 + j);
}

const Rational& BivariateSeries::operator()(int i, int j) const { return c_[index(i, j)]; }
Rational& BivariateSeries::operator()(int i, int j) { return c_[index(i, j)]; }

BivariateSeries BivariateSeries::swapped() const {
  BivariateSeries r(order_);
  for (int d = 0; d <= order_; ++d)
    for (int j = 0; j <= d; ++j) r(j, d - j) = (*this)(d - j, j);
  return r;
}

Series BivariateSeries::slice_s1() const {
  Series r(order_);
  for (int i = 0; i <= order_; ++i) r[i] = (*this)(i, 0);
  return r;
}

BivariateSeries operator+(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries r(std::min(a.order_, b.order_));
  for (int d = 0; d <= r.order_; ++d)
    for (int j = 0; j <= d; ++j) r(d - j, j) = a(d - j, j) + b(d - j, j);
  return r;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
  BivariateSeries r(std::min(a.order_, b.order_));
  for (int d1 = 0; d1 <= r.order_; ++d1)
    for (int j1 = 0; j1 <= d1; ++j1) {
      const Rational& x = a(d1 - j1, j1);
      if (x.is_zero()) continue;
      for (int d2 = 0; d1 + d2 <= r.order_; ++d2)
        for (int j2 = 0; j2 <= d2; ++j2) r(d1 - j1 + d2 - j2, j1 + j2) += x * b(d2 - j2, j2);
    }
  return r;
}

BivariateSeries BivariateSeries::pow(int p) const {
  if (p < 0) throw PreconditionError("BivariateSeries: negative power");
  BivariateSeries r(order_);
  r(0, 0) = 1;
  for (int k = 0; k < p; ++k) r = r * *this;
  return r;
}

BivariateSeries two_time_z0(int nu1, int nu2, int order) {
  if (nu1 < 1 || nu2 < 1) throw PreconditionError("two_time_z0: valences must be positive");
  const Rational c1(c_nu(nu1));
  const Rational c2(c_nu(nu2));
  BivariateSeries z(order);
  z(0, 0) = 1;
  for (int pass = 0; pass < order; ++pass) {
    const BivariateSeries p1 = z.pow(nu1);
    const BivariateSeries p2 = z.pow(nu2);
    BivariateSeries next(order);
    next(0, 0) = 1;
    for (int d = 0; d < order; ++d)
      for (int j = 0; j <= d; ++j) {
        next(d - j + 1, j) += c1 * p1(d - j, j);
        next(d - j, j + 1) += c2 * p2(d - j, j);
      }
    z = std::move(next);
  }
  return z;
}

}  // namespace ctoda
