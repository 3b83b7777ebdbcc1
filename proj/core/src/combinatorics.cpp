#include "ctoda/combinatorics.hpp"

#include <algorithm>

#include "ctoda/errors.hpp"

namespace ctoda {

BigInt factorial(long n) {
  if (n < 0) throw PreconditionError("factorial of a negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt falling_factorial(long e, long j) {
  if (j < 0) throw PreconditionError("falling_factorial: negative length");
  BigInt r = 1;
  for (long i = 0; i < j; ++i) r *= e - i;
  return r;
}

BigInt binomial(long top, long k) {
  if (k < 0) return 0;
  if (top >= 0) {
    if (k > top) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(k));
    return r;
  }
  return falling_factorial(top, k) / factorial(k);
}

BigInt double_factorial_odd(long m) {
  if (m < 0) throw PreconditionError("double_factorial_odd: negative argument");
  BigInt r = 1;
  for (long i = 1; i <= m; ++i) r *= 2 * i - 1;
  return r;
}

BigInt c_nu(int nu) {
  if (nu < 1) throw PreconditionError("c_nu: nu must be >= 1");
  return 2 * nu * binomial(2 * nu - 1, nu - 1);
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> integer_partitions(int n) {
  if (n < 0) throw PreconditionError("integer_partitions: negative n");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

}  // namespace ctoda
