#pragma once

#include <cstdint>
#include <vector>

#include "ctoda/rational.hpp"

namespace ctoda {

BigInt factorial(long n);

// binom(top, k) for any integer top, computed as top(top-1)...(top-k+1)/k!.
// Zero for k < 0.
BigInt binomial(long top, long k);

// e(e-1)...(e-j+1); equals 1 for j = 0. Defined for negative e as well.
BigInt falling_factorial(long e, long j);

// (2m-1)!! for m >= 0, i.e. the number of perfect matchings on 2m points.
BigInt double_factorial_odd(long m);

// c_nu = 2 nu binom(2 nu - 1, nu - 1), the leading walk-sum multiplier.
BigInt c_nu(int nu);

// Partitions of n as non-increasing part lists, in reverse-lexicographic
// order ({n} first, {1,...,1} last).
std::vector<std::vector<int>> integer_partitions(int n);

}  // namespace ctoda
