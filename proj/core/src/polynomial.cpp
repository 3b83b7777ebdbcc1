#include "ctoda/polynomial.hpp"

#include <ostream>
#include <sstream>

#include "ctoda/errors.hpp"

namespace ctoda {

Polynomial::Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  if (degree < 0) throw PreconditionError("Polynomial::monomial: negative degree");
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::x() { return monomial(1, 1); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::operator[](int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return c_[static_cast<size_t>(i)];
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) throw PreconditionError("Polynomial::leading: zero polynomial");
  return c_.back();
}

Rational Polynomial::operator()(const Rational& at) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Series Polynomial::operator()(const Series& at) const {
  Series acc(at.order());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * at;
    acc[0] += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::pow(int p) const {
  if (p < 0) throw PreconditionError("Polynomial::pow: negative exponent");
  Polynomial r(Rational(1));
  Polynomial base = *this;
  while (p > 0) {
    if (p & 1) r = r * base;
    base = base * base;
    p >>= 1;
  }
  return r;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> r;
  for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Rational(static_cast<long>(i)));
  return Polynomial(std::move(r));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Polynomial r = *this;
  const Rational lead = leading();
  for (auto& c : r.c_) c /= lead;
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw PreconditionError("Polynomial::divmod: division by zero polynomial");
  Polynomial rem = *this;
  const int dd = divisor.degree();
  if (rem.degree() < dd) return {Polynomial(), rem};
  std::vector<Rational> q(static_cast<size_t>(rem.degree() - dd) + 1);
  const Rational lead = divisor.leading();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int shift = rem.degree() - dd;
    const Rational factor = rem.leading() / lead;
    q[static_cast<size_t>(shift)] = factor;
    for (int i = 0; i <= dd; ++i) rem.c_[static_cast<size_t>(i + shift)] -= factor * divisor.c_[static_cast<size_t>(i)];
    rem.trim();
  }
  return {Polynomial(std::move(q)), rem};
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[i] << ")";
    if (i >= 1) os << "*" << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw PreconditionError("RationalFunction: zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  const Polynomial common = gcd(num_, den_);
  num_ = num_.divmod(common).first;
  den_ = den_.divmod(common).first;
  const Rational lead = den_.leading();
  den_ = den_.monic();
  num_ = num_ * Polynomial(Rational(1) / lead);
}

Series RationalFunction::operator()(const Series& at) const { return num_(at) / den_(at); }

Rational RationalFunction::operator()(const Rational& at) const { return num_(at) / den_(at); }

}  // namespace ctoda
