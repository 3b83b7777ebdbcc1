#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ctoda/rational.hpp"

namespace ctoda {

// Truncated formal power series sum_{n=0}^{N} a_n s^n over the rationals.
//
// The truncation order N is part of the value: binary operations produce
// order min(N1, N2), derivative() loses one order, integral() gains one.
class Series {
 public:
  // The zero series of order `order`.
  explicit Series(int order = 0);
  Series(std::vector<Rational> coefficients);  // NOLINT(google-explicit-constructor)
  Series(std::initializer_list<Rational> coefficients, int order);

  static Series constant(const Rational& c, int order);
  // The series s.
  static Series variable(int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int n) const;
  Rational& operator[](int n);
  // Asking past the order is a TruncationError, never an implicit zero.
  const Rational& at(int n) const { return (*this)[n]; }
  std::span<const Rational> coefficients() const { return c_; }

  bool is_zero() const;
  Series truncated(int order) const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Rational& k);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator-(const Series& a);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const Rational& k) { return a *= k; }
  friend Series operator*(const Rational& k, Series a) { return a *= k; }
  // Requires b[0] != 0.
  friend Series operator/(const Series& a, const Series& b);

  friend bool operator==(const Series& a, const Series& b) = default;

  Series inverse() const;
  Series pow(long p) const;
  Series derivative() const;
  // Antiderivative with zero constant term.
  Series integral() const;
  // Multiply by s^k (k >= 0), keeping the order.
  Series shifted(int k) const;

  // Evaluate outer(inner(s)); inner[0] must be 0.
  Series compose(const Series& inner) const;

  std::string str() const;

 private:
  std::vector<Rational> c_;
};

// log(a) for a[0] == 1.
Series log(const Series& a);
// exp(a) for a[0] == 0.
Series exp(const Series& a);

std::ostream& operator<<(std::ostream& os, const Series& s);

}  // namespace ctoda
