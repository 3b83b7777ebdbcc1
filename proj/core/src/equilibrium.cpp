#include "ctoda/equilibrium.hpp"

#include "ctoda/combinatorics.hpp"
#include "ctoda/errors.hpp"

namespace ctoda::equilibrium {

namespace {

void require_nu(int nu) {
  if (nu < 2) throw PreconditionError("nu must be at least 2");
}

void require_positive(const Rational& z, const char* what) {
  if (z.sign() <= 0) throw PreconditionError(std::string(what) + " must be positive");
}

Rational beta_squared(const Rational& x, const Rational& z) { return Rational(4) * x * z; }

}  // namespace

E0Form e0_form(int nu) {
  require_nu(nu);
  return {Rational((nu - 1) * (nu - 1), 4L * nu * (nu + 1)), Rational(3 * (nu + 1), nu - 1)};
}

Rational v_coeff(int i, const Rational& beta_sq) {
  if (i < 0) throw PreconditionError("v_coeff: negative index");
  if (i == 0) return beta_sq / Rational(2);
  return Rational(binomial(2 * i - 1, i - 1)) * pow(beta_sq, i + 1) / (pow(Rational(4), i) * Rational(i + 1));
}

Rational h_coeff(int nu, int j, const Rational& t, const Rational& beta_sq) {
  require_nu(nu);
  if (j < 0 || j > nu - 1) throw PreconditionError("h_coeff: index out of range");
  return Rational(4L * nu * (nu - j)) * t * v_coeff(nu - 1 - j, beta_sq) / beta_sq;
}

Rational mass_constraint(int nu, const Rational& x, const Rational& z) {
  require_nu(nu);
  if (z.is_zero()) throw PreconditionError("mass_constraint: z = 0");
  return (Rational(1) - z) / (Rational(c_nu(nu)) * pow(x, nu - 1) * pow(z, nu));
}

Rational mass_moment(int nu, const Rational& x, const Rational& t, const Rational& beta_sq) {
  Rational acc = v_coeff(0, beta_sq);
  for (int j = 0; j < nu; ++j) acc += h_coeff(nu, j, t, beta_sq) * v_coeff(j, beta_sq);
  return acc / x;
}

LagrangeMultiplier lagrange_multiplier(int nu, const Rational& x, const Rational& z) {
  require_nu(nu);
  require_positive(z, "z");
  require_positive(x, "x");
  return {-Rational(nu - 1, nu) * (z - Rational(1)) - Rational(1), x * z};
}

LogExpr lagrange_multiplier_from_moments(int nu, const Rational& x, const Rational& z) {
  require_nu(nu);
  require_positive(z, "z");
  const Rational b2 = beta_squared(x, z);
  const Rational t = mass_constraint(nu, x, z);
  Rational acc;
  for (int p = 1; p < nu; ++p) {
    Rational inner;
    for (int j = p; j < nu; ++j) inner += h_coeff(nu, j, t, b2) * v_coeff(j, b2);
    const Rational w = inner / (Rational(2 * (p + 1)) * v_coeff(p, b2));
    acc += w * (b2 * v_coeff(p - 1, b2) - v_coeff(p, b2));
  }
  return LogExpr(acc / x - Rational(1)) + LogExpr::log_of(b2 / Rational(4));
}

Rational potential_moment(int nu, const Rational& x, const Rational& z) {
  require_nu(nu);
  require_positive(z, "z");
  const Rational b2 = beta_squared(x, z);
  const Rational b4 = b2 * b2;
  const Rational n(nu);
  const Rational top = Rational(-8) * x * b2 * n * n + b4 * n * n - Rational(2) * b4 * n -
                       Rational(16) * x * x * n - Rational(16) * x * x + Rational(8) * b2 * n * x + b4;
  return -top / (Rational(32) * x * Rational(nu + 1) * n);
}

Rational potential_moment_from_moments(int nu, const Rational& x, const Rational& z) {
  require_nu(nu);
  require_positive(z, "z");
  const Rational b2 = beta_squared(x, z);
  const Rational t = mass_constraint(nu, x, z);
  Rational quadratic = v_coeff(1, b2);
  Rational top = t * v_coeff(nu, b2);
  for (int j = 0; j < nu; ++j) {
    const Rational h = h_coeff(nu, j, t, b2);
    quadratic += h * v_coeff(j + 1, b2);
    top += t * h * v_coeff(j + nu, b2);
  }
  return quadratic / (Rational(4) * x) + top / (Rational(2) * x);
}

E0Value e0_closed_form(int nu, const Rational& z) {
  require_positive(z, "z");
  const auto [eta, r] = e0_form(nu);
  return {eta * (z - Rational(1)) * (z - r), z};
}

LogExpr e0_assembly(int nu, const Rational& x, const Rational& z) {
  // Second moment of the Gaussian density: twice (V, psi) at t = 0.
  const Rational second_moment_0 = Rational(2) * potential_moment(nu, x, Rational(1));
  const LogExpr minus_l = lagrange_multiplier(nu, x, z).value();
  const LogExpr minus_l_0 = lagrange_multiplier(nu, x, Rational(1)).value();
  LogExpr e = LogExpr(-potential_moment(nu, x, z) / (Rational(2) * x));
  e += minus_l * Rational(1, 2);
  e += LogExpr(second_moment_0 / (Rational(4) * x));
  e -= minus_l_0 * Rational(1, 2);
  return e;
}

bool e0_assembly_check(int nu, const Rational& x, const Rational& z) {
  return e0_assembly(nu, x, z) == e0_closed_form(nu, z).value();
}

Rational zeta_j(int nu, int j) {
  if (j < 1) throw PreconditionError("zeta_j: j must be at least 1");
  return Rational(binomial(static_cast<long>(nu) * j, j - 1)) / Rational(j);
}

Rational log_coeff_L(int nu, int j) {
  if (j < 1) throw PreconditionError("log_coeff_L: j must be at least 1");
  return Rational(binomial(static_cast<long>(nu) * j - 1, j - 1)) / Rational(j);
}

Rational quad_coeff_U2(int nu, int j) {
  if (j < 1) throw PreconditionError("quad_coeff_U2: j must be at least 1");
  return Rational(2) * Rational(binomial(static_cast<long>(nu) * j, j - 2)) / Rational(j);
}

Rational kappa0(int nu, int n) {
  require_nu(nu);
  if (n < 1) throw PreconditionError("kappa0: n must be at least 1");
  BigInt cn;
  mpz_pow_ui(cn.get_mpz_t(), c_nu(nu).get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(cn * factorial(static_cast<long>(nu) * n - 1), factorial(static_cast<long>(nu - 1) * n + 2));
}

SBasis s_basis_closed(int j, const Rational& lambda, const Rational& beta_sq) {
  if (j < 0) throw PreconditionError("s_basis_closed: negative index");
  const Rational l2 = lambda * lambda;
  const Rational vj = v_coeff(j, beta_sq);
  Rational sum;
  for (int i = 1; i <= j; ++i) sum += pow(l2, i) / (v_coeff(i, beta_sq) * Rational(i + 1));
  return {vj * sum / Rational(2), vj * l2 / beta_sq, -vj};
}

SBasis s_basis_recursive(int j, const Rational& lambda, const Rational& beta_sq) {
  if (j < 0) throw PreconditionError("s_basis_recursive: negative index");
  const Rational l2 = lambda * lambda;
  // d_0 = (1/2) lambda sqrt(lambda^2 - beta^2) - (1/2) beta^2 log(...).
  SBasis s{Rational(0), l2 / Rational(2), -beta_sq / Rational(2)};
  for (int i = 1; i <= j; ++i) {
    const Rational step = Rational(2 * i - 1, 2 * (i + 1)) * beta_sq;
    s = {pow(l2, i) / Rational(2 * (i + 1)) + step * s.s1, step * s.s2, step * s.s3};
  }
  return s;
}

bool appendix_S_check(int j_max, const Rational& lambda, const Rational& beta_sq) {
  if (j_max < 1) throw PreconditionError("appendix_S_check: j_max must be at least 1");
  for (int j = 0; j <= j_max; ++j) {
    const SBasis closed = s_basis_closed(j, lambda, beta_sq);
    if (!(closed == s_basis_recursive(j, lambda, beta_sq))) return false;
    if (closed.s3 != -v_coeff(j, beta_sq)) return false;
  }
  return true;
}

}  // namespace ctoda::equilibrium
