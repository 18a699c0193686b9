#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kltvol/plane_curve.hpp"
#include "kltvol/univariate.hpp"

namespace kltvol {

/// One coprime factor g(t) of the dehomogenized initial form, t = y^m1 / x^m2.
struct FormFactor {
  int degree = 0;        ///< deg g: number of points of P^1 it marks (over Q-bar)
  int multiplicity = 0;  ///< power of g in the initial form
  std::size_t id = 0;    ///< index into InitialForms::basis
};

/// Weighted initial form of a curve for weights (m1, m2), written as
/// x^axis_x * y^axis_y * prod g_l(y^m1 / x^m2)^{e_l} (up to a unit and the
/// power of x that makes each g_l homogeneous).
struct InitialFormFactorization {
  int axis_x = 0;  ///< power of x: strict transform of {x=0} through the index-m2 point
  int axis_y = 0;  ///< power of y: strict transform of {y=0} through the index-m1 point
  std::vector<FormFactor> factors;

  /// Sum of degree * multiplicity over the non-axis factors.
  std::int64_t transverse_length() const;
};

/// Factorizations of several curves against a shared coprime basis, so that
/// equal ids mean the same points of P^1 and distinct ids are coprime.
struct InitialForms {
  std::vector<InitialFormFactorization> per_curve;
  std::vector<UPoly> basis;
};

/// The dehomogenized non-axis part h(t) of the initial form, with h(0) != 0,
/// together with the axis powers.
struct DehomogenizedForm {
  int axis_x = 0;
  int axis_y = 0;
  UPoly h;
};

DehomogenizedForm dehomogenized_initial_form(const PlaneCurve& curve, const IntWeights& w);

InitialForms initial_form_factorization(std::span<const PlaneCurve> curves, const IntWeights& w);

InitialFormFactorization initial_form_factorization(const PlaneCurve& curve, const IntWeights& w);

}  // namespace kltvol
