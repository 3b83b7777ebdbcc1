#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ctoda/series.hpp"

namespace ctoda {

// Dense univariate polynomial over the rationals, coefficients by ascending
// power. The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::vector<Rational> ascending);  // NOLINT(google-explicit-constructor)
  Polynomial(const Rational& c);                // NOLINT(google-explicit-constructor)
  static Polynomial monomial(const Rational& c, int degree);
  // The variable itself.
  static Polynomial x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational operator[](int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& at) const;
  // Substitute a series for the variable; the result has the series' order.
  Series operator()(const Series& at) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial pow(int p) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  // Quotient and remainder; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  bool divisible_by(const Polynomial& d) const { return divmod(d).second.is_zero(); }

  std::string str(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

// numerator / denominator with the common factor removed and the
// denominator made monic.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(Rational(1)) {}
  RationalFunction(Polynomial numerator, Polynomial denominator);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  // Requires the denominator's value at the series' constant term be nonzero.
  Series operator()(const Series& at) const;
  Rational operator()(const Rational& at) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

 private:
  Polynomial num_;
  Polynomial den_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace ctoda
