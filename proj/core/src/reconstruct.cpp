#include "ctoda/reconstruct.hpp"

#include <algorithm>
#include <array>

#include "ctoda/combinatorics.hpp"
#include "ctoda/errors.hpp"

namespace ctoda {

namespace {

// p(u) with u = z - 1, rewritten as a polynomial in z.
Polynomial shift_to_z(const Polynomial& in_u) {
  const Polynomial u = Polynomial::x() - Polynomial(Rational(1));
  Polynomial acc;
  for (int i = in_u.degree(); i >= 0; --i) acc = acc * u + Polynomial(in_u[i]);
  return acc;
}

Polynomial pole_factor(int nu) {
  return Polynomial(std::vector<Rational>{Rational(nu), Rational(1 - nu)});
}

// (1 - (nu-1) u)^p as a series in u.
Series pole_series(int nu, int p, int order) {
  Series base = Series::constant(1, order);
  if (order >= 1) base[1] = Rational(1 - nu);
  return base.pow(p);
}

Series one_plus(int sign_mult, int order) {
  Series b = Series::constant(1, order);
  if (order >= 1) b[1] = Rational(sign_mult);
  return b;
}

}  // namespace

Series inverse_z0(int nu, int order) {
  // s = u / (c_nu (1+u)^nu)
  const Series tail = one_plus(1, order).pow(-nu) * (Rational(1) / Rational(c_nu(nu)));
  return tail.shifted(1);
}

ZgReconstruction reconstruct_zg(int nu, int genus, const Series& zg, int margin) {
  if (nu < 2 || genus < 1) throw PreconditionError("reconstruct_zg: need nu >= 2 and genus >= 1");
  const int order = zg.order();
  const int bound = 5 * genus - 1 + nu;
  const int degree = std::min(bound, order - margin);
  if (degree < 2) throw TruncationError("reconstruct_zg: series order " + std::to_string(order) + " too small");
  ZgReconstruction out;
  out.degree_bound = degree;
  out.checked_tail = order - degree;
  const int pole = 5 * genus - 1;
  const Series y = zg.compose(inverse_z0(nu, order)) * pole_series(nu, pole, order);
  for (int n = degree + 1; n <= order; ++n) {
    if (!y[n].is_zero()) {
      out.diagnostic = "nonzero coefficient of u^" + std::to_string(n) + " beyond degree " + std::to_string(degree);
      return out;
    }
  }
  std::vector<Rational> coeffs(y.coefficients().begin(), y.coefficients().begin() + degree + 1);
  out.form = RationalFunction(shift_to_z(Polynomial(std::move(coeffs))), pole_factor(nu).pow(pole));
  out.ok = true;
  return out;
}

Series EgClosedForm::operator()(const Series& z0) const {
  if (z0[0] != Rational(1)) throw PreconditionError("EgClosedForm: z0 must start at 1");
  Series out = rational(z0);
  if (!log_pole.is_zero()) out += log(pole_factor(nu)(z0)) * log_pole;
  if (!log_z.is_zero()) out += log(z0) * log_z;
  return out;
}

namespace {

// Solves rows * (x, y) = rhs exactly. Returns false if inconsistent. When the
// system does not determine both unknowns the free one is set to zero.
bool solve_two_unknowns(std::vector<std::array<Rational, 3>> rows, Rational& x, Rational& y) {
  size_t rank = 0;
  std::array<int, 2> pivot_col{-1, -1};
  for (int col = 0; col < 2 && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][static_cast<size_t>(col)].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const Rational lead = rows[rank][static_cast<size_t>(col)];
    for (auto& v : rows[rank]) v /= lead;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][static_cast<size_t>(col)].is_zero()) continue;
      const Rational f = rows[r][static_cast<size_t>(col)];
      for (size_t k = 0; k < 3; ++k) rows[r][k] -= f * rows[rank][k];
    }
    pivot_col[rank] = col;
    ++rank;
  }
  for (size_t r = rank; r < rows.size(); ++r)
    if (!rows[r][2].is_zero()) return false;
  x = 0;
  y = 0;
  for (size_t r = 0; r < rank; ++r) (pivot_col[r] == 0 ? x : y) = rows[r][2];
  return true;
}

}  // namespace

EgReconstruction reconstruct_eg(int nu, int genus, const Series& eg, int margin) {
  if (nu < 2 || genus < 0) throw PreconditionError("reconstruct_eg: need nu >= 2 and genus >= 0");
  const int order = eg.order();
  const int pole = std::max(0, 5 * (genus - 1));
  const int bound = pole + nu + 1;
  const int degree = std::min(bound, order - margin - 2);
  if (degree < 2) throw TruncationError("reconstruct_eg: series order " + std::to_string(order) + " too small");
  EgReconstruction out;
  out.pole_order = pole;
  out.degree_bound = degree;
  out.checked_tail = order - degree - 2;

  const Series q = pole_series(nu, pole, order);
  const Series lhs = eg.compose(inverse_z0(nu, order)) * q;
  Series log_pole_basis = log(pole_series(nu, 1, order)) * q;
  Series log_z_basis = log(one_plus(1, order)) * q;

  std::vector<std::array<Rational, 3>> rows;
  for (int n = degree + 1; n <= order; ++n) rows.push_back({log_pole_basis[n], log_z_basis[n], lhs[n]});
  Rational c;
  Rational d;
  if (!solve_two_unknowns(rows, c, d)) {
    out.diagnostic = "no rational + two-logarithm fit with numerator degree " + std::to_string(degree) +
                     " and pole order " + std::to_string(pole);
    return out;
  }
  std::vector<Rational> p(static_cast<size_t>(degree) + 1);
  for (int n = 0; n <= degree; ++n) p[static_cast<size_t>(n)] = lhs[n] - c * log_pole_basis[n] - d * log_z_basis[n];
  out.form = EgClosedForm{nu, RationalFunction(shift_to_z(Polynomial(std::move(p))), pole_factor(nu).pow(pole)), c, d};
  out.ok = true;
  return out;
}

}  // namespace ctoda
