#include "ctoda/log_expr.hpp"

#include <ostream>
#include <sstream>

#include "ctoda/errors.hpp"

namespace ctoda {

namespace {

std::map<BigInt, long> factor(BigInt n) {
  std::map<BigInt, long> out;
  for (BigInt p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

}  // namespace

void LogExpr::add_log(const BigInt& prime, const Rational& c) {
  auto& slot = logs_[prime];
  slot += c;
  if (slot.is_zero()) logs_.erase(prime);
}

LogExpr LogExpr::log_of(const Rational& argument, const Rational& coeff) {
  if (argument.sign() <= 0) throw PreconditionError("LogExpr::log_of: non-positive argument " + argument.str());
  LogExpr e;
  for (const auto& [p, k] : factor(argument.numerator())) e.add_log(p, coeff * Rational(k));
  for (const auto& [p, k] : factor(argument.denominator())) e.add_log(p, -coeff * Rational(k));
  return e;
}

Rational LogExpr::log_coefficient_of(const Rational& argument) const {
  const LogExpr unit = log_of(argument);
  if (unit.logs_.empty()) {
    if (!logs_.empty()) throw ConsistencyError("log part is not a multiple of log(1)");
    return Rational(0);
  }
  const auto& [p0, c0] = *unit.logs_.begin();
  const auto it = logs_.find(p0);
  const Rational k = it == logs_.end() ? Rational(0) : it->second / c0;
  LogExpr scaled = unit * k;
  scaled.rational_ = rational_;
  if (!(scaled == *this)) throw ConsistencyError("log part is not a multiple of log(" + argument.str() + ")");
  return k;
}

LogExpr& LogExpr::operator+=(const LogExpr& o) {
  rational_ += o.rational_;
  for (const auto& [p, c] : o.logs_) add_log(p, c);
  return *this;
}

LogExpr& LogExpr::operator-=(const LogExpr& o) {
  rational_ -= o.rational_;
  for (const auto& [p, c] : o.logs_) add_log(p, -c);
  return *this;
}

LogExpr& LogExpr::operator*=(const Rational& k) {
  if (k.is_zero()) {
    logs_.clear();
    rational_ = 0;
    return *this;
  }
  rational_ *= k;
  for (auto& [p, c] : logs_) c *= k;
  return *this;
}

std::string LogExpr::str() const {
  std::ostringstream os;
  os << rational_;
  for (const auto& [p, c] : logs_) os << " + (" << c << ")*log(" << p.get_str() << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LogExpr& e) { return os << e.str(); }

}  // namespace ctoda
