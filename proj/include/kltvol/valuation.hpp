#pragma once

#include "kltvol/log_pair.hpp"
#include "kltvol/plane_curve.hpp"

namespace kltvol {

/// Monomial valuation v_w on the plane germ: v(x) = w.x, v(y) = w.y, and
/// v(f) is the weighted order of f.
class MonomialValuation {
 public:
  /// Throws InvalidArgument unless both weights are positive.
  MonomialValuation(Rational wx, Rational wy);
  explicit MonomialValuation(const IntWeights& w);

  const Weights& weights() const noexcept { return w_; }

  /// Coprime integer weights on the same ray.
  IntWeights canonical() const;

  Rational operator()(const PlaneCurve& f) const { return f.weighted_order(w_); }

  /// v(m) = min(w.x, w.y).
  Rational of_maximal_ideal() const;

  /// A_X(v) = w.x + w.y on the smooth plane.
  Rational ambient_log_discrepancy() const { return w_.x + w_.y; }

  /// vol(v) = 1 / (w.x * w.y).
  Rational volume() const;

  MonomialValuation scaled(const Rational& lambda) const;

 private:
  Weights w_;
};

struct ValuationReport {
  Rational logdisc;          ///< A_(X,Delta)(v)
  Rational vol;              ///< vol(v)
  Rational nvol;             ///< A^2 * vol
  Rational ambient_logdisc;  ///< A_X(v)
};

/// A_(X,Delta)(v) = w.x + w.y - Sum a_i v(f_i). May be <= 0.
Rational log_discrepancy(const LogPair& pair, const MonomialValuation& v);

/// Throws NonPositiveDiscrepancy when A_(X,Delta)(v) <= 0.
ValuationReport nvol_of(const LogPair& pair, const MonomialValuation& v);

/// Default Izumi constant, valid for the boundary-free smooth plane.
inline const Rational kDefaultIzumiC2{1};

/// v(m) * ord(f) <= v(f) <= C2 * A_(X,Delta)(v) * ord(f).
bool izumi_check(const LogPair& pair, const MonomialValuation& v, const PlaneCurve& f,
                 const Rational& c2 = kDefaultIzumiC2);

/// A_(X,Delta)(v) >= gamma/(1+gamma) * A_X(v) and the squared statement for
/// normalized volumes. Throws InvalidArgument when (1+gamma)*Delta is not
/// positive at v, i.e. outside the hypothesis.
bool kill_boundary_check(const LogPair& pair, const Rational& gamma, const MonomialValuation& v);

/// nvol(v) * v(m) / A(v): empirical witness for the properness constant C1.
Rational properness_ratio(const LogPair& pair, const MonomialValuation& v);

}  // namespace kltvol
