#pragma once

#include <vector>

#include "kltvol/log_pair.hpp"
#include "kltvol/plane_curve.hpp"

namespace kltvol {

class MonomialValuation;

/// Monomial ideal in k[x,y] given by its minimal generators, sorted by
/// ascending x-exponent (so descending y-exponent).
class MonomialIdeal {
 public:
  /// Minimizes the generator list. Throws InvalidArgument when empty or when
  /// an exponent is negative.
  explicit MonomialIdeal(std::vector<Exponent> generators);

  static MonomialIdeal maximal();

  const std::vector<Exponent>& generators() const noexcept { return gens_; }

  bool contains(const Exponent& e) const;

  /// min over generators of p*w.x + q*w.y.
  Rational order(const Weights& w) const;

  /// {d*g}: the generators scaled by d.
  MonomialIdeal dilate(int d) const;

  /// Generators of this + other, minimized.
  MonomialIdeal operator+(const MonomialIdeal& other) const;

  /// Generators of this * other, minimized.
  MonomialIdeal operator*(const MonomialIdeal& other) const;

  /// Lower-left convex hull of the generators (Newton polygon vertices),
  /// ascending in x.
  std::vector<Exponent> newton_vertices() const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  std::vector<Exponent> gens_;
};

bool is_m_primary(const MonomialIdeal& ideal);

/// Hilbert-Samuel multiplicity: 2 * area of the region below the Newton
/// polygon. Throws NotPrimary for ideals of infinite colength.
Rational multiplicity(const MonomialIdeal& ideal);

/// Number of monomials outside the ideal; requires is_m_primary.
Integer colength(const MonomialIdeal& ideal);

/// lct of the ideal with respect to a smooth pair whose boundary consists of
/// monomial curves. Exact: the ratio A(w)/v_w(ideal) is monotone between
/// consecutive Newton breakpoints, so breakpoints and the two axis limits
/// suffice. Throws NonMonomialBoundary, NotKlt.
Rational lct_ideal(const LogPair& pair, const MonomialIdeal& ideal);

struct LctSumCheck {
  Rational lhs;  ///< lct(a + b)
  Rational rhs;  ///< lct(a) + lct(b)
  bool ok = false;
};

LctSumCheck lct_sum_check(const LogPair& pair, const MonomialIdeal& a, const MonomialIdeal& b);

/// Minimal generators of {x^p y^q : p*w1 + q*w2 >= level}.
MonomialIdeal valuation_ideal(const MonomialValuation& v, const Rational& level);

}  // namespace kltvol
