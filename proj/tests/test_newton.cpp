#include <random>

#include "doctest.h"
#include "kltvol/newton.hpp"

using namespace kltvol;

TEST_CASE("Newton diagram of the tailed cusp") {
  const NewtonDiagram d = newton_diagram(PlaneCurve::parse("y^2 - x^3 - x^7"));
  REQUIRE(d.vertices.size() == 2);
  CHECK(d.vertices[0] == Exponent{3, 0});
  CHECK(d.vertices[1] == Exponent{0, 2});
  REQUIRE(d.facets.size() == 1);
  CHECK(d.facets[0].normal == IntWeights{2, 3});
  CHECK(d.facets[0].value == 6);
  CHECK(d.edge_length({2, 3}) == 1);
  CHECK(d.edge_length({1, 1}) == 0);
}

TEST_CASE("interior points are dropped") {
  const NewtonDiagram d = newton_diagram(PlaneCurve::parse("x^4 + x^2*y^2 + y^4 + x^3*y^3"));
  CHECK(d.vertices.size() == 2);
  CHECK(d.edge_length({1, 1}) == 4);
}

TEST_CASE("monomial has no facet") {
  const NewtonDiagram d = newton_diagram(PlaneCurve::parse("x^2*y"));
  CHECK(d.vertices.size() == 1);
  CHECK(d.facets.empty());
}

TEST_CASE("property: diagram order equals brute force") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    PlaneCurve::Terms t;
    const int n = 1 + static_cast<int>(rng() % 6);
    while (static_cast<int>(t.size()) < n) {
      const int p = static_cast<int>(rng() % 8);
      const int q = static_cast<int>(rng() % 8);
      if (p + q > 0) t[{p, q}] = 1;
    }
    const PlaneCurve f(std::move(t));
    const NewtonDiagram d = newton_diagram(f);
    for (int a = 1; a <= 6; ++a) {
      for (int b = 1; b <= 6; ++b) {
        const Weights w{make_rational(a), make_rational(b, 2)};
        CHECK(d.weighted_order(w) == f.weighted_order(w));
      }
    }
    // Facet slopes strictly decrease from the bottom-right end.
    for (std::size_t i = 0; i + 1 < d.facets.size(); ++i) {
      CHECK(make_rational(d.facets[i].normal.m2, d.facets[i].normal.m1) >
            make_rational(d.facets[i + 1].normal.m2, d.facets[i + 1].normal.m1));
    }
  }
}
