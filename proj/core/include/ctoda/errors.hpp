#pragma once

#include <stdexcept>
#include <string>

namespace ctoda {

// Caller violated an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two routes that must agree exactly did not, or a computed quantity broke
// an invariant (non-integral map count, nonzero resonant driver, ...).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A series was asked for a coefficient beyond its truncation order.
class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A resonant constant of integration has no available source.
class UnresolvedConstantError : public std::runtime_error {
 public:
  UnresolvedConstantError(int genus, int nu, int order, const std::string& why)
      : std::runtime_error(why), genus_(genus), nu_(nu), order_(order) {}

  int genus() const { return genus_; }
  int nu() const { return nu_; }
  int order() const { return order_; }

 private:
  int genus_;
  int nu_;
  int order_;
};

// The exhaustive oracle refused to run because the estimated work exceeds
// the configured budget.
class BudgetExceededError : public std::runtime_error {
 public:
  BudgetExceededError(const std::string& estimate, const std::string& why)
      : std::runtime_error(why), estimate_(estimate) {}

  const std::string& estimate() const { return estimate_; }

 private:
  std::string estimate_;
};

}  // namespace ctoda
