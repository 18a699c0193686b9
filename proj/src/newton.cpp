#include "kltvol/newton.hpp"

#include <algorithm>
#include <numeric>

#include "kltvol/error.hpp"

namespace kltvol {

namespace {

std::int64_t cross(const Exponent& o, const Exponent& a, const Exponent& b) {
  return static_cast<std::int64_t>(a.x - o.x) * (b.y - o.y) -
         static_cast<std::int64_t>(a.y - o.y) * (b.x - o.x);
}

}  // namespace

std::vector<Exponent> newton_boundary(std::vector<Exponent> pts) {
  // Pareto-minimal points, sorted by p ascending (so q strictly descending).
  std::sort(pts.begin(), pts.end());
  std::vector<Exponent> stair;
  for (const auto& e : pts) {
    if (stair.empty() || e.y < stair.back().y) stair.push_back(e);
  }

  // Lower convex hull of the staircase.
  std::vector<Exponent> hull;
  for (const auto& e : stair) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), e) <= 0) hull.pop_back();
    hull.push_back(e);
  }
  std::reverse(hull.begin(), hull.end());
  return hull;
}

NewtonDiagram newton_diagram(const PlaneCurve& curve) {
  std::vector<Exponent> pts;
  for (const auto& [e, c] : curve.terms()) pts.push_back(e);
  const std::vector<Exponent> hull = newton_boundary(std::move(pts));

  NewtonDiagram nd;
  nd.vertices = hull;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const std::int64_t dp = hull[i].x - hull[i + 1].x;  // > 0
    const std::int64_t dq = hull[i + 1].y - hull[i].y;  // > 0
    const std::int64_t g = std::gcd(dp, dq);
    Facet f;
    f.normal = IntWeights{dq / g, dp / g};
    f.value = f.normal.m1 * hull[i].x + f.normal.m2 * hull[i].y;
    nd.facets.push_back(f);
  }
  return nd;
}

Rational NewtonDiagram::weighted_order(const Weights& w) const {
  if (vertices.empty()) throw Error(ErrorKind::InvalidArgument, "empty Newton diagram");
  Rational best = w.x * vertices.front().x + w.y * vertices.front().y;
  for (const auto& v : vertices) {
    Rational val = w.x * v.x + w.y * v.y;
    if (val < best) best = val;
  }
  return best;
}

const Exponent& NewtonDiagram::active_vertex(const Rational& t) const {
  if (vertices.empty()) throw Error(ErrorKind::InvalidArgument, "empty Newton diagram");
  std::size_t arg = 0;
  Rational best = vertices[0].x + t * vertices[0].y;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    Rational val = vertices[i].x + t * vertices[i].y;
    if (val < best) {
      best = val;
      arg = i;
    }
  }
  return vertices[arg];
}

std::int64_t NewtonDiagram::edge_length(const IntWeights& w) const {
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (facets[i].normal == w) return (vertices[i].x - vertices[i + 1].x) / w.m2;
  }
  return 0;
}

}  // namespace kltvol
