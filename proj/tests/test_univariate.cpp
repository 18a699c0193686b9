#include <random>

#include "doctest.h"
#include "kltvol/univariate.hpp"

using namespace kltvol;

namespace {

UPoly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return UPoly(std::move(v));
}

UPoly power(const UPoly& f, int e) {
  UPoly out = UPoly::constant(1);
  for (int i = 0; i < e; ++i) out = out * f;
  return out;
}

}  // namespace

TEST_CASE("arithmetic and division") {
  const UPoly f = P({-1, 0, 1});  // t^2 - 1
  const UPoly g = P({1, 1});      // t + 1
  const auto [q, r] = divmod(f, g);
  CHECK(q == P({-1, 1}));
  CHECK(r.is_zero());
  CHECK(exact_div(f, g) == P({-1, 1}));
  CHECK(f(Rational(3)) == 8);
  CHECK(f.derivative() == P({0, 2}));
  CHECK((f - f).is_zero());
  CHECK(UPoly().degree() == -1);
}

TEST_CASE("gcd") {
  CHECK(gcd(P({-1, 0, 1}), P({1, 1})) == P({1, 1}));
  CHECK(gcd(P({1, 0, 1}), P({1, 1})) == P({1}));
  CHECK(gcd(P({0, 0, 2}), P({0, 3})) == P({0, 1}));
}

TEST_CASE("squarefree decomposition") {
  // (t-1)^3 (t+2) (t^2+1)^2
  const UPoly f = power(P({-1, 1}), 3) * P({2, 1}) * power(P({1, 0, 1}), 2);
  const auto parts = squarefree_decomposition(f);
  REQUIRE(parts.size() == 3);
  UPoly rebuilt = UPoly::constant(1);
  for (const auto& [s, e] : parts) rebuilt = rebuilt * power(s, e);
  CHECK(rebuilt == f.monic());
}

TEST_CASE("coprime basis") {
  const UPoly a = P({-1, 0, 1});       // (t-1)(t+1)
  const UPoly b = P({-1, 1}) * P({2, 1});  // (t-1)(t+2)
  const auto basis = coprime_basis({a, b});
  CHECK(basis.size() == 3);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) CHECK(gcd(basis[i], basis[j]).degree() == 0);
  }
}

TEST_CASE("property: Yun rebuilds random products") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    UPoly f = UPoly::constant(static_cast<long>(rng() % 5) + 1);
    const int factors = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < factors; ++k) {
      const long c0 = static_cast<long>(rng() % 9) - 4;
      const long c1 = static_cast<long>(rng() % 3) - 1;
      f = f * power(P({c0, c1, 1}), 1 + static_cast<int>(rng() % 3));
    }
    UPoly rebuilt = UPoly::constant(1);
    for (const auto& [s, e] : squarefree_decomposition(f)) {
      CHECK(gcd(s, s.derivative()).degree() == 0);
      rebuilt = rebuilt * power(s, e);
    }
    CHECK(rebuilt == f.monic());
  }
}
