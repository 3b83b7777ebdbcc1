#include "ctoda/series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "ctoda/errors.hpp"

namespace ctoda {

Series::Series(int order) {
  if (order < 0) throw PreconditionError("Series: negative truncation order");
  c_.assign(static_cast<size_t>(order) + 1, Rational(0));
}

Series::Series(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  if (c_.empty()) throw PreconditionError("Series: empty coefficient list");
}

Series::Series(std::initializer_list<Rational> coefficients, int order) : Series(order) {
  int i = 0;
  for (const auto& v : coefficients) {
    if (i > order) break;
    c_[static_cast<size_t>(i++)] = v;
  }
}

Series Series::constant(const Rational& c, int order) {
  Series s(order);
  s.c_[0] = c;
  return s;
}

Series Series::variable(int order) {
  Series s(order);
  if (order >= 1) s.c_[1] = 1;
  return s;
}

const Rational& Series::operator[](int n) const {
  if (n < 0 || n > order())
    throw TruncationError("Series: coefficient " + std::to_string(n) +
                          " requested beyond order " + std::to_string(order()));
  return c_[static_cast<size_t>(n)];
}

Rational& Series::operator[](int n) {
  if (n < 0 || n > order())
    throw TruncationError("Series: coefficient " + std::to_string(n) +
                          " requested beyond order " + std::to_string(order()));
  return c_[static_cast<size_t>(n)];
}

bool Series::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

Series Series::truncated(int order) const {
  if (order > this->order())
    throw TruncationError("Series: cannot raise truncation order " + std::to_string(this->order()) +
                          " to " + std::to_string(order));
  return Series(std::vector<Rational>(c_.begin(), c_.begin() + order + 1));
}

Series& Series::operator+=(const Series& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Series& Series::operator*=(const Rational& k) {
  for (auto& v : c_) v *= k;
  return *this;
}

Series operator-(const Series& a) {
  Series r = a;
  for (auto& v : r.c_) v = -v;
  return r;
}

Series operator*(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  Series r(n);
  mpq_class acc;
  for (int k = 0; k <= n; ++k) {
    acc = 0;
    for (int i = 0; i <= k; ++i) {
      const auto& x = a.c_[static_cast<size_t>(i)];
      const auto& y = b.c_[static_cast<size_t>(k - i)];
      if (x.is_zero() || y.is_zero()) continue;
      acc += x.raw() * y.raw();
    }
    r.c_[static_cast<size_t>(k)] = Rational::from_mpq(acc);
  }
  return r;
}

Series Series::inverse() const {
  if (c_[0].is_zero()) throw PreconditionError("Series: inverse of a series with zero constant term");
  const int n = order();
  Series r(n);
  const Rational inv0 = Rational(1) / c_[0];
  r.c_[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    mpq_class acc = 0;
    for (int i = 1; i <= k; ++i) acc += c_[static_cast<size_t>(i)].raw() * r.c_[static_cast<size_t>(k - i)].raw();
    r.c_[static_cast<size_t>(k)] = -Rational::from_mpq(acc) * inv0;
  }
  return r;
}

Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

Series Series::pow(long p) const {
  if (p < 0) return inverse().pow(-p);
  Series result = constant(1, order());
  Series base = *this;
  while (p > 0) {
    if (p & 1) result = result * base;
    p >>= 1;
    if (p > 0) base = base * base;
  }
  return result;
}

Series Series::derivative() const {
  if (order() == 0) throw TruncationError("Series: derivative of an order-0 series has no coefficients");
  Series r(order() - 1);
  for (int k = 0; k < order(); ++k) r.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k + 1)] * Rational(k + 1);
  return r;
}

Series Series::integral() const {
  Series r(order() + 1);
  for (int k = 0; k <= order(); ++k) r.c_[static_cast<size_t>(k + 1)] = c_[static_cast<size_t>(k)] / Rational(k + 1);
  return r;
}

Series Series::shifted(int k) const {
  if (k < 0) throw PreconditionError("Series: negative shift");
  Series r(order());
  for (int i = 0; i + k <= order(); ++i) r.c_[static_cast<size_t>(i + k)] = c_[static_cast<size_t>(i)];
  return r;
}

Series Series::compose(const Series& inner) const {
  if (!inner.c_[0].is_zero()) throw PreconditionError("Series: compose requires inner constant term 0");
  const int n = std::min(order(), inner.order());
  // Horner: outer(u) = c0 + u (c1 + u (c2 + ...)).
  Series acc = constant(c_[static_cast<size_t>(n)], n);
  const Series u = inner.truncated(n);
  for (int k = n - 1; k >= 0; --k) {
    acc = acc * u;
    acc.c_[0] += c_[static_cast<size_t>(k)];
  }
  return acc;
}

std::string Series::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order(); ++k) {
    if (c_[static_cast<size_t>(k)].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[static_cast<size_t>(k)];
    if (k > 0) os << "*s^" << k;
  }
  if (first) os << "0";
  os << " + O(s^" << order() + 1 << ")";
  return os.str();
}

Series log(const Series& a) {
  if (a[0] != Rational(1)) throw PreconditionError("log: constant term must be 1");
  if (a.order() == 0) return Series(0);
  return (a.derivative() / a.truncated(a.order() - 1)).integral();
}

Series exp(const Series& a) {
  if (!a[0].is_zero()) throw PreconditionError("exp: constant term must be 0");
  const int n = a.order();
  Series r(n);
  r[0] = 1;
  // n b_n = sum_{k=1}^{n} k a_k b_{n-k}
  for (int m = 1; m <= n; ++m) {
    mpq_class acc = 0;
    for (int k = 1; k <= m; ++k) acc += mpq_class(k) * a[k].raw() * r[m - k].raw();
    r[m] = Rational::from_mpq(acc) / Rational(m);
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const Series& s) { return os << s.str(); }

}  // namespace ctoda
