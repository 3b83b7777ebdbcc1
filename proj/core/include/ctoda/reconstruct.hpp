#pragma once

#include <string>

#include "ctoda/polynomial.hpp"
#include "ctoda/series.hpp"

// Closed forms in the variable z = z_0(s), found by substituting the exact
// inverse s = (z - 1) / (c_nu z^nu) and fitting a bounded ansatz.
namespace ctoda {

struct ZgReconstruction {
  bool ok = false;
  RationalFunction form;  // valid when ok
  int degree_bound = 0;   // numerator degree allowed by the ansatz
  int checked_tail = 0;   // coefficients verified to vanish beyond the fit
  std::string diagnostic;
};

// Ansatz z_g (nu - (nu-1) z)^{5g-1} = polynomial in z. The series must carry
// at least `margin` coefficients beyond the fitted degree.
ZgReconstruction reconstruct_zg(int nu, int genus, const Series& zg, int margin = 4);

// rational(z) + log_pole * log(nu - (nu-1) z) + log_z * log(z)
struct EgClosedForm {
  int nu = 2;
  RationalFunction rational;
  Rational log_pole;
  Rational log_z;

  // Composes with a z_0 series; constant term of z0 must be 1.
  Series operator()(const Series& z0) const;
};

struct EgReconstruction {
  bool ok = false;
  EgClosedForm form;
  int pole_order = 0;
  int degree_bound = 0;
  int checked_tail = 0;
  std::string diagnostic;
};

// Pole order of the rational part is max(0, 5(g-1)).
EgReconstruction reconstruct_eg(int nu, int genus, const Series& eg, int margin = 4);

// The series of s as a function of u = z_0 - 1.
Series inverse_z0(int nu, int order);

}  // namespace ctoda
