#include <random>

#include "doctest.h"
#include "kltvol/error.hpp"
#include "kltvol/valuation.hpp"
#include "support.hpp"

using namespace kltvol;
using kltvol::test::Q;
using kltvol::test::smooth;

TEST_CASE("basic quantities") {
  const MonomialValuation v(Q("2"), Q("3"));
  CHECK(v.volume() == Q("1/6"));
  CHECK(v.of_maximal_ideal() == 2);
  CHECK(v.ambient_log_discrepancy() == 5);
  CHECK(v.canonical() == IntWeights{2, 3});
  CHECK(MonomialValuation(Q("4/3"), Q("2")).canonical() == IntWeights{2, 3});
  CHECK_THROWS_AS(MonomialValuation(Q("0"), Q("1")), Error);
  CHECK_THROWS_AS(MonomialValuation(Q("1"), Q("-1")), Error);
}

TEST_CASE("log discrepancy and normalized volume") {
  const LogPair plane = LogPair::smooth();
  const ValuationReport r = nvol_of(plane, MonomialValuation(Q("1"), Q("1")));
  CHECK(r.logdisc == 2);
  CHECK(r.nvol == 4);
  const LogPair cusp = smooth({{"1/2", "x^2 - y^3"}});
  const ValuationReport c = nvol_of(cusp, MonomialValuation(Q("3"), Q("2")));
  CHECK(c.logdisc == 2);
  CHECK(c.nvol == Q("2/3"));
  CHECK(c.ambient_logdisc == 5);
  CHECK_THROWS_AS(nvol_of(smooth({{"2/3", "x^3"}}), MonomialValuation(Q("1"), Q("1"))), Error);
  CHECK_THROWS_AS(log_discrepancy(LogPair(CyclicQuotient(2, 1), {}), MonomialValuation(Q("1"), Q("1"))), Error);
}

TEST_CASE("property: nvol is scale invariant and at least the monomial bound") {
  std::mt19937_64 rng(13);
  const LogPair plane = LogPair::smooth();
  for (int i = 0; i < 300; ++i) {
    const MonomialValuation v(make_rational(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 4)),
                              make_rational(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 4)));
    const Rational lambda = make_rational(1 + static_cast<long>(rng() % 7), 1 + static_cast<long>(rng() % 7));
    CHECK(nvol_of(plane, v).nvol == nvol_of(plane, v.scaled(lambda)).nvol);
    // (w1 + w2)^2 / (w1 w2) >= 4 on the smooth plane.
    CHECK(nvol_of(plane, v).nvol >= 4);
  }
}

TEST_CASE("Izumi estimate") {
  const LogPair plane = LogPair::smooth();
  const char* curves[] = {"x^2 - y^3", "x*y", "y + x^5", "x^3*y^2 + y^7"};
  for (const char* s : curves) {
    for (int a = 1; a <= 5; ++a) {
      for (int b = 1; b <= 5; ++b) {
        CHECK(izumi_check(plane, MonomialValuation(make_rational(a), make_rational(b)), PlaneCurve::parse(s)));
      }
    }
  }
  // A constant that is too small is detected.
  CHECK_FALSE(izumi_check(plane, MonomialValuation(Q("1"), Q("10")), PlaneCurve::parse("y"), Q("1/20")));
}

TEST_CASE("killing the boundary") {
  const LogPair pair = smooth({{"1/2", "x"}, {"1/3", "y"}});
  CHECK(kill_boundary_check(pair, Q("1/2"), MonomialValuation(Q("1"), Q("1"))));
  // (1+gamma) Delta with gamma = 3 is not allowed at (1,1): 2 - 4*(5/6) < 0.
  CHECK_THROWS_AS(kill_boundary_check(pair, Q("3"), MonomialValuation(Q("1"), Q("1"))), Error);
  // The statement at the boundary of the hypothesis: A((1+gamma)Delta) = 0.
  CHECK(kill_boundary_check(smooth({{"1/2", "x"}}), Q("1"), MonomialValuation(Q("1"), Q("1"))));
}

TEST_CASE("properness ratio") {
  const LogPair plane = LogPair::smooth();
  CHECK(properness_ratio(plane, MonomialValuation(Q("1"), Q("1"))) == 2);
  CHECK(properness_ratio(plane, MonomialValuation(Q("1"), Q("3"))) == Q("4/3"));
}
