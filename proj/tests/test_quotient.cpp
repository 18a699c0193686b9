#include <numeric>

#include "doctest.h"
#include "kltvol/corpus.hpp"
#include "kltvol/error.hpp"
#include "kltvol/quotient.hpp"
#include "support.hpp"

using namespace kltvol;
using kltvol::test::Q;

TEST_CASE("cyclic quotient types") {
  CHECK(CyclicQuotient::parse("Q(5,2)") == CyclicQuotient(5, 2));
  CHECK(CyclicQuotient::parse(" Q( 1 , 0 ) ").r == 1);
  CHECK_THROWS_AS(CyclicQuotient(4, 2), Error);
  CHECK_THROWS_AS(CyclicQuotient(3, 3), Error);
  CHECK_THROWS_AS(CyclicQuotient(0, 0), Error);
  CHECK_THROWS_AS(CyclicQuotient::parse("Q(5)"), Error);
  const CyclicQuotient a2(3, 2);
  CHECK(a2.is_invariant(PlaneCurve::parse("x*y")));
  CHECK(a2.is_invariant(PlaneCurve::parse("x^3 + y^3 + x*y")));
  CHECK_FALSE(a2.is_invariant(PlaneCurve::parse("x + y")));
  CHECK_THROWS_AS(LogPair(a2, {{Q("1/2"), PlaneCurve::parse("x + y")}}), Error);
}

TEST_CASE("A_m volumes") {
  for (int m = 1; m <= 50; ++m) {
    const NvolCertificate c = quotient_nvol(CyclicQuotient(m + 1, m), {});
    CHECK(c.value == make_rational(4, m + 1));
    CHECK(c.certified);
    CHECK(c.degree == m + 1);
  }
  for (int r = 2; r <= 12; ++r) {
    for (int a = 1; a < r; ++a) {
      if (std::gcd(a, r) == 1) CHECK(quotient_nvol(CyclicQuotient(r, a), {}).value == make_rational(4, r));
    }
  }
}

TEST_CASE("A_m with the two axes") {
  const std::vector<BoundaryTerm> axes{{Q("1/2"), PlaneCurve::parse("x")}, {Q("1/2"), PlaneCurve::parse("y")}};
  for (int m = 1; m <= 10; ++m) {
    CHECK(quotient_nvol(CyclicQuotient(m + 1, m), axes).value == make_rational(1, m + 1));
  }
}

TEST_CASE("group order bound") {
  CHECK(group_order_bound(Q("1")) == 3);
  CHECK(group_order_bound(Q("4")) == 0);
  CHECK(group_order_bound(Q("1/10")) == 39);
  CHECK(group_order_bound(Q("3/10")) == 13);
  CHECK_THROWS_AS(group_order_bound(Q("0")), Error);
  CHECK_THROWS_AS(group_order_bound(Q("5")), Error);
}

TEST_CASE("quotient census") {
  const auto two = enumerate_quotients_with_nvol_above(Q("2"));
  REQUIRE(two.size() == 1);
  CHECK(two[0].first.r == 1);
  CHECK(two[0].second == 4);
  CHECK(enumerate_quotients_with_nvol_above(Q("39/10")).size() == 1);
  CHECK(enumerate_quotients_with_nvol_above(Q("4")).empty());
  const auto one = enumerate_quotients_with_nvol_above(Q("1"));
  CHECK(one.size() == 4);
  // Cardinality is non-increasing in epsilon; every value is 4/r > epsilon.
  std::size_t previous = SIZE_MAX;
  for (int n = 1; n <= 40; ++n) {
    const Rational eps = make_rational(n, 10);
    const auto list = enumerate_quotients_with_nvol_above(eps);
    CHECK(list.size() <= previous);
    previous = list.size();
    for (const auto& [q, v] : list) {
      CHECK(v > eps);
      CHECK(v == make_rational(4, q.r));
    }
  }
}

TEST_CASE("finite degree formula on invariant boundaries") {
  const InstanceCorpus corpus = generate_corpus({{}, 4, 100, 3, CorpusKind::QuotientInvariant, false});
  REQUIRE(corpus.instances.size() == 100);
  for (const auto& pair : corpus.instances) {
    const auto& q = std::get<CyclicQuotient>(pair.ambient());
    const NvolCertificate down = quotient_nvol(pair);
    CHECK(down.value * q.r == minimize_nvol(pair.on_cover().swapped()).value);
    // Swapping coordinates turns (1/r)(1,a) into (1/r)(1,a^-1).
    CHECK(quotient_nvol(pair.swapped()).value == down.value);
    // The quotient has smaller volume than the smooth cover (r >= 2).
    CHECK(down.value < 4);
  }
}
