#pragma once

#include <map>
#include <tuple>

#include "ctoda/graded.hpp"

namespace ctoda {

// Finite sum of monomials coeff * h^g * s^n * w^e, truncated at genus G and
// s-order N. The w-exponent is an arbitrary (possibly negative) integer.
class MonomialSeries {
 public:
  struct Key {
    int genus;
    int s_power;
    int w_exponent;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  MonomialSeries(int genus_truncation, int order) : G_(genus_truncation), N_(order) {}

  // sum_g h^g w^{base - 2g} z_g(w^{nu-1} s). With base = 1 this is the
  // two-variable scheme built from the Toda coefficients.
  static MonomialSeries scheme(const GradedExpansion& z, int nu, int base = 1);
  // w^{base} a(w^{nu-1} s) placed in a single genus slot.
  static MonomialSeries rescaled(const Series& a, int nu, int base, int genus, int genus_truncation);

  int genus_truncation() const { return G_; }
  int order() const { return N_; }
  const std::map<Key, Rational>& terms() const { return terms_; }

  void add(Key k, const Rational& c);

  MonomialSeries& operator+=(const MonomialSeries& o);
  friend MonomialSeries operator+(MonomialSeries a, const MonomialSeries& b) { return a += b; }
  friend MonomialSeries operator*(const MonomialSeries& a, const MonomialSeries& b);
  friend bool operator==(const MonomialSeries&, const MonomialSeries&) = default;

  // d^j/dw^j, as a MonomialSeries.
  MonomialSeries w_derivative(int j) const;
  // d^j/dw^j followed by w = 1.
  GradedExpansion w_derivative_at_one(int j) const;
  GradedExpansion at_w_one() const { return w_derivative_at_one(0); }

 private:
  int G_;
  int N_;
  std::map<Key, Rational> terms_;
};

}  // namespace ctoda
