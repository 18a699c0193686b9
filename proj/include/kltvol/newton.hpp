#pragma once

#include <cstdint>
#include <vector>

#include "kltvol/plane_curve.hpp"

namespace kltvol {

/// Compact edge of a Newton diagram. `normal` is the primitive inward normal
/// (both entries positive); `value` is normal.m1*p + normal.m2*q on the edge.
struct Facet {
  IntWeights normal;
  std::int64_t value = 0;
};

/// Lower-left Newton boundary of a support. Vertices run from the bottom-right
/// end (largest p) to the top-left end (largest q).
struct NewtonDiagram {
  std::vector<Exponent> vertices;
  std::vector<Facet> facets;

  /// min over vertices of p*w.x + q*w.y.
  Rational weighted_order(const Weights& w) const;

  /// A vertex minimizing p + q*t.
  const Exponent& active_vertex(const Rational& t) const;

  /// Lattice length of the edge supported by `w`; 0 when w only touches a vertex.
  std::int64_t edge_length(const IntWeights& w) const;
};

NewtonDiagram newton_diagram(const PlaneCurve& curve);

/// Vertices of the lower-left convex hull of a point set (plus the positive
/// quadrant), ordered by descending first coordinate.
std::vector<Exponent> newton_boundary(std::vector<Exponent> points);

}  // namespace kltvol
