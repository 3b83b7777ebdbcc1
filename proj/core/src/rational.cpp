#include "ctoda/rational.hpp"

#include <ostream>

#include "ctoda/errors.hpp"

namespace ctoda {

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw PreconditionError("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

Rational Rational::from_mpq(const mpq_class& q) {
  Rational r;
  r.q_ = q;
  return r;
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s, 10));
    return Rational(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw PreconditionError("Rational: cannot parse '" + s + "'");
  }
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw PreconditionError("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw PreconditionError("Rational: zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  const unsigned long e = static_cast<unsigned long>(exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), e);
  return Rational::from_mpq(mpq_class(num, den));
}

Rational abs(const Rational& v) { return v.sign() < 0 ? -v : v; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ctoda
