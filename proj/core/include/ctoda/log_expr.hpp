#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "ctoda/rational.hpp"

namespace ctoda {

// q + sum_p c_p log(p) over primes p, so that equality of two expressions is
// decided exactly (logs of distinct primes are linearly independent over Q).
class LogExpr {
 public:
  LogExpr() = default;
  LogExpr(const Rational& rational_part) : rational_(rational_part) {}  // NOLINT

  // coeff * log(argument); argument must be positive.
  static LogExpr log_of(const Rational& argument, const Rational& coeff = 1);

  const Rational& rational_part() const { return rational_; }
  const std::map<BigInt, Rational>& log_part() const { return logs_; }
  // Coefficient of log(argument) when this expression's log part is exactly
  // a multiple of log(argument); throws ConsistencyError otherwise.
  Rational log_coefficient_of(const Rational& argument) const;

  LogExpr& operator+=(const LogExpr& o);
  LogExpr& operator-=(const LogExpr& o);
  LogExpr& operator*=(const Rational& k);
  friend LogExpr operator+(LogExpr a, const LogExpr& b) { return a += b; }
  friend LogExpr operator-(LogExpr a, const LogExpr& b) { return a -= b; }
  friend LogExpr operator*(LogExpr a, const Rational& k) { return a *= k; }
  friend LogExpr operator*(const Rational& k, LogExpr a) { return a *= k; }
  friend bool operator==(const LogExpr&, const LogExpr&) = default;

  std::string str() const;

 private:
  void add_log(const BigInt& prime, const Rational& c);
  Rational rational_;
  std::map<BigInt, Rational> logs_;
};

std::ostream& operator<<(std::ostream& os, const LogExpr& e);

}  // namespace ctoda
