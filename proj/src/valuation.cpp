#include "kltvol/valuation.hpp"

#include "kltvol/error.hpp"

namespace kltvol {

MonomialValuation::MonomialValuation(Rational wx, Rational wy) : w_{std::move(wx), std::move(wy)} {
  if (w_.x <= 0 || w_.y <= 0) throw Error(ErrorKind::InvalidArgument, "monomial valuation weights must be positive");
}

MonomialValuation::MonomialValuation(const IntWeights& w) : MonomialValuation(to_weights(w).x, to_weights(w).y) {}

IntWeights MonomialValuation::canonical() const {
  // w.x : w.y = num_x * den_y : num_y * den_x, then divide out the gcd.
  Integer a = w_.x.get_num() * w_.y.get_den();
  Integer b = w_.y.get_num() * w_.x.get_den();
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  a /= g;
  b /= g;
  return {to_int64(a), to_int64(b)};
}

Rational MonomialValuation::of_maximal_ideal() const { return w_.x < w_.y ? w_.x : w_.y; }

Rational MonomialValuation::volume() const { return 1 / (w_.x * w_.y); }

MonomialValuation MonomialValuation::scaled(const Rational& lambda) const {
  return MonomialValuation(w_.x * lambda, w_.y * lambda);
}

Rational log_discrepancy(const LogPair& pair, const MonomialValuation& v) {
  require_smooth(pair, "log_discrepancy");
  return v.ambient_log_discrepancy() - boundary_order(pair, v.weights());
}

ValuationReport nvol_of(const LogPair& pair, const MonomialValuation& v) {
  ValuationReport r;
  r.logdisc = log_discrepancy(pair, v);
  if (r.logdisc <= 0) {
    throw Error(ErrorKind::NonPositiveDiscrepancy, "A(v) = " + to_string(r.logdisc) + " at this valuation");
  }
  r.ambient_logdisc = v.ambient_log_discrepancy();
  r.vol = v.volume();
  r.nvol = r.logdisc * r.logdisc * r.vol;
  return r;
}

bool izumi_check(const LogPair& pair, const MonomialValuation& v, const PlaneCurve& f, const Rational& c2) {
  const Rational a = log_discrepancy(pair, v);
  if (a <= 0) throw Error(ErrorKind::NonPositiveDiscrepancy, "Izumi estimate needs A(v) > 0");
  const Rational ord = f.order();
  const Rational vf = v(f);
  return v.of_maximal_ideal() * ord <= vf && vf <= c2 * a * ord;
}

bool kill_boundary_check(const LogPair& pair, const Rational& gamma, const MonomialValuation& v) {
  if (gamma <= 0) throw Error(ErrorKind::InvalidArgument, "gamma must be positive");
  require_smooth(pair, "kill_boundary_check");
  const Rational ax = v.ambient_log_discrepancy();
  const Rational b = boundary_order(pair, v.weights());
  if (ax - (1 + gamma) * b < 0) {
    throw Error(ErrorKind::InvalidArgument, "(1+gamma)*Delta has negative log discrepancy at v");
  }
  const Rational a = ax - b;
  const Rational ratio = gamma / (1 + gamma);
  const bool linear = a >= ratio * ax;
  const bool squared = a * a * v.volume() >= ratio * ratio * ax * ax * v.volume();
  return linear && squared;
}

Rational properness_ratio(const LogPair& pair, const MonomialValuation& v) {
  const ValuationReport r = nvol_of(pair, v);
  return r.nvol * v.of_maximal_ideal() / r.logdisc;
}

}  // namespace kltvol
