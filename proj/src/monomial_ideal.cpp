#include "kltvol/monomial_ideal.hpp"

#include <algorithm>
#include <optional>

#include "kltvol/error.hpp"
#include "kltvol/newton.hpp"
#include "kltvol/valuation.hpp"

namespace kltvol {

namespace {

std::vector<Exponent> minimize(std::vector<Exponent> gens) {
  std::sort(gens.begin(), gens.end());
  std::vector<Exponent> out;
  for (const auto& g : gens) {
    if (out.empty() || g.y < out.back().y) out.push_back(g);
  }
  return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::vector<Exponent> generators) {
  if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "monomial ideal needs a generator");
  for (const auto& g : generators) {
    if (g.x < 0 || g.y < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent in ideal generator");
  }
  gens_ = minimize(std::move(generators));
}

MonomialIdeal MonomialIdeal::maximal() { return MonomialIdeal({{1, 0}, {0, 1}}); }

bool MonomialIdeal::contains(const Exponent& e) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Exponent& g) { return g.x <= e.x && g.y <= e.y; });
}

Rational MonomialIdeal::order(const Weights& w) const {
  Rational best = w.x * gens_.front().x + w.y * gens_.front().y;
  for (const auto& g : gens_) {
    Rational v = w.x * g.x + w.y * g.y;
    if (v < best) best = v;
  }
  return best;
}

MonomialIdeal MonomialIdeal::dilate(int d) const {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "dilation factor must be positive");
  std::vector<Exponent> g;
  for (const auto& e : gens_) g.push_back({e.x * d, e.y * d});
  return MonomialIdeal(std::move(g));
}

MonomialIdeal MonomialIdeal::operator+(const MonomialIdeal& other) const {
  std::vector<Exponent> g = gens_;
  g.insert(g.end(), other.gens_.begin(), other.gens_.end());
  return MonomialIdeal(std::move(g));
}

MonomialIdeal MonomialIdeal::operator*(const MonomialIdeal& other) const {
  std::vector<Exponent> g;
  for (const auto& a : gens_) {
    for (const auto& b : other.gens_) g.push_back({a.x + b.x, a.y + b.y});
  }
  return MonomialIdeal(std::move(g));
}

std::vector<Exponent> MonomialIdeal::newton_vertices() const {
  auto v = newton_boundary(gens_);
  std::reverse(v.begin(), v.end());
  return v;
}

bool is_m_primary(const MonomialIdeal& ideal) {
  const auto& g = ideal.generators();
  return g.front().x == 0 && g.back().y == 0;
}

Rational multiplicity(const MonomialIdeal& ideal) {
  if (!is_m_primary(ideal)) throw Error(ErrorKind::NotPrimary, "ideal has infinite colength");
  const auto v = ideal.newton_vertices();
  Integer twice_area = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    twice_area += Integer(v[i + 1].x - v[i].x) * Integer(v[i].y + v[i + 1].y);
  }
  // e = 2! * area = twice_area.
  return Rational(twice_area);
}

Integer colength(const MonomialIdeal& ideal) {
  if (!is_m_primary(ideal)) throw Error(ErrorKind::NotPrimary, "ideal has infinite colength");
  const auto& g = ideal.generators();
  Integer n = 0;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) n += Integer(g[i + 1].x - g[i].x) * Integer(g[i].y);
  return n;
}

Rational lct_ideal(const LogPair& pair, const MonomialIdeal& ideal) {
  require_smooth(pair, "lct_ideal");
  if (!pair.monomial_boundary()) {
    throw Error(ErrorKind::NonMonomialBoundary, "lct of an ideal needs single-monomial boundary curves");
  }
  if (ideal.contains({0, 0})) throw Error(ErrorKind::InvalidArgument, "lct of the unit ideal is infinite");

  // On the ray w = (1, t): A(t) = alpha + beta*t.
  Rational alpha = 1;
  Rational beta = 1;
  for (const auto& b : pair.boundary()) {
    const Exponent e = b.curve.terms().begin()->first;
    alpha -= b.coeff * e.x;
    beta -= b.coeff * e.y;
  }
  if (alpha <= 0 || beta <= 0) throw Error(ErrorKind::NotKlt, "pair is not klt along a coordinate axis");

  std::optional<Rational> best;
  auto consider = [&](const Rational& value) {
    if (!best || value < *best) best = value;
  };

  // t -> 0 reads the divisor {x = 0}; t -> infinity reads {y = 0}.
  int min_x = ideal.generators().front().x;
  int min_y = ideal.generators().back().y;
  if (min_x > 0) consider(alpha / min_x);
  if (min_y > 0) consider(beta / min_y);

  const auto v = ideal.newton_vertices();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    const Rational t = make_rational(v[i + 1].x - v[i].x, v[i].y - v[i + 1].y);
    const Weights w{Rational(1), t};
    consider((alpha + beta * t) / ideal.order(w));
  }
  return *best;
}

LctSumCheck lct_sum_check(const LogPair& pair, const MonomialIdeal& a, const MonomialIdeal& b) {
  LctSumCheck r;
  r.lhs = lct_ideal(pair, a + b);
  r.rhs = lct_ideal(pair, a) + lct_ideal(pair, b);
  r.ok = r.lhs <= r.rhs;
  return r;
}

MonomialIdeal valuation_ideal(const MonomialValuation& v, const Rational& level) {
  if (level <= 0) throw Error(ErrorKind::InvalidArgument, "valuation ideal level must be positive");
  const Weights& w = v.weights();
  std::vector<Exponent> gens;
  for (int q = 0;; ++q) {
    Integer p = ceil((level - w.y * q) / w.x);
    if (p < 0) p = 0;
    gens.push_back({static_cast<int>(to_int64(p)), q});
    if (p == 0) break;
  }
  return MonomialIdeal(std::move(gens));
}

}  // namespace kltvol
