#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kltvol/newton.hpp"
#include "kltvol/plane_curve.hpp"

namespace kltvol {

/// Affine piece of the boundary order on the weight ray w = (1, t):
/// B(t) = gamma + delta*t and A(t) = 1 + t - B(t) = alpha + beta*t for
/// t in (lo, hi). `hi` is empty on the unbounded last piece.
struct RayPiece {
  Rational lo;
  std::optional<Rational> hi;
  Rational alpha;
  Rational beta;
  Rational gamma;
  Rational delta;

  bool contains_interior(const Rational& t) const { return t > lo && (!hi || t < *hi); }
};

/// Piecewise-affine model of t -> Sum a_i v_(1,t)(f_i) built from the Newton
/// diagrams. Breakpoints are the slopes v/u of every facet normal (u, v).
class RayModel {
 public:
  RayModel(std::span<const Rational> coeffs, std::span<const PlaneCurve> curves);

  const std::vector<Rational>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<RayPiece>& pieces() const noexcept { return pieces_; }

  Rational boundary_order(const Rational& t) const;
  Rational log_discrepancy(const Rational& t) const { return 1 + t - boundary_order(t); }

  /// A at t -> 0+ (first piece alpha) and the slope of A as t -> infinity.
  const Rational& alpha_at_zero() const { return pieces_.front().alpha; }
  const Rational& beta_at_infinity() const { return pieces_.back().beta; }

 private:
  std::vector<Rational> coeffs_;
  std::vector<NewtonDiagram> diagrams_;
  std::vector<Rational> breakpoints_;
  std::vector<RayPiece> pieces_;
};

}  // namespace kltvol
