#pragma once

#include "ctoda/log_expr.hpp"
#include "ctoda/rational.hpp"

// Exact genus-zero quantities of the one-matrix model with potential
// lambda^2/2 + t lambda^{2 nu}, parameterized by z = beta^2 / (4x) where
// [-beta, beta] is the support of the equilibrium measure. This module uses
// the matrix-model coupling t; the hierarchy modules use s = -t (at x = 1).
namespace ctoda::equilibrium {

struct E0Form {
  Rational eta;
  Rational r;
};
E0Form e0_form(int nu);

// Coefficient of lambda^{-2i-2} in 1 - sqrt(lambda^2 - beta^2)/lambda.
Rational v_coeff(int i, const Rational& beta_sq);
// Coefficient of lambda^{2j} in x*h(lambda) - 1, for 0 <= j <= nu-1.
Rational h_coeff(int nu, int j, const Rational& t, const Rational& beta_sq);

// t such that the measure has unit mass, closed form.
Rational mass_constraint(int nu, const Rational& x, const Rational& z);
// (v_0 + sum_j h_j v_j) / x at the given t; equals 2 exactly on the constraint.
Rational mass_moment(int nu, const Rational& x, const Rational& t, const Rational& beta_sq);

// -l = rational_part + log(log_argument).
struct LagrangeMultiplier {
  Rational rational_part;
  Rational log_argument;
  LogExpr value() const { return LogExpr(rational_part) + LogExpr::log_of(log_argument); }
};
LagrangeMultiplier lagrange_multiplier(int nu, const Rational& x, const Rational& z);
// -l from the large-lambda expansion coefficients, independently of the
// simplified form above.
LogExpr lagrange_multiplier_from_moments(int nu, const Rational& x, const Rational& z);

// (V, psi) from the simplified closed form in beta^2, x, nu.
Rational potential_moment(int nu, const Rational& x, const Rational& z);
// (V, psi) from the h_j, v_j contour sum.
Rational potential_moment_from_moments(int nu, const Rational& x, const Rational& z);

// e_0 = rational_part + (1/2) log(half_log_of).
struct E0Value {
  Rational rational_part;
  Rational half_log_of;
  LogExpr value() const { return LogExpr(rational_part) + LogExpr::log_of(half_log_of, Rational(1, 2)); }
};
E0Value e0_closed_form(int nu, const Rational& z);
// e_0 assembled from (V,psi), -l and their Gaussian-point values.
LogExpr e0_assembly(int nu, const Rational& x, const Rational& z);
bool e0_assembly_check(int nu, const Rational& x, const Rational& z);

// Taylor coefficients in alpha = c_nu x^{nu-1} t (up to sign) of z, log z
// and the quadratic term, and the genus-zero map counts.
Rational zeta_j(int nu, int j);
Rational log_coeff_L(int nu, int j);
Rational quad_coeff_U2(int nu, int j);
Rational kappa0(int nu, int n);

// Checks that the closed forms of the three basis coefficients of
// d_j = int_beta^lambda s^{2j} sqrt(s^2 - beta^2) ds satisfy the
// integration-by-parts recursion for every j <= j_max at the sample point.
bool appendix_S_check(int j_max, const Rational& lambda, const Rational& beta_sq);

struct SBasis {
  Rational s1;  // coefficient of (lambda^2 - beta^2) sqrt(lambda^2 - beta^2) / lambda
  Rational s2;  // coefficient of sqrt(lambda^2 - beta^2) / lambda
  Rational s3;  // coefficient of log(lambda/beta + sqrt(lambda^2 - beta^2)/beta)
  friend bool operator==(const SBasis&, const SBasis&) = default;
};
SBasis s_basis_closed(int j, const Rational& lambda, const Rational& beta_sq);
// The basis coefficients obtained by running the recursion from d_0.
SBasis s_basis_recursive(int j, const Rational& lambda, const Rational& beta_sq);

}  // namespace ctoda::equilibrium
