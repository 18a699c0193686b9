#include "kltvol/kollar.hpp"

#include <algorithm>

#include "kltvol/error.hpp"
#include "kltvol/initial_form.hpp"
#include "kltvol/ray_model.hpp"

namespace kltvol {

Rational KollarComponent::different_degree() const {
  Rational total = 0;
  for (const auto& c : different) total += c.d * c.count;
  return total;
}

P1Divisor P1Divisor::from(const KollarComponent& kc) {
  P1Divisor div;
  for (const auto& c : kc.different) div.entries.push_back({c.count, c.d});
  return div;
}

Rational P1Divisor::degree() const {
  Rational total = 0;
  for (const auto& e : entries) total += e.d * e.count;
  return total;
}

KollarComponent raw_different(std::span<const Rational> coeffs, std::span<const PlaneCurve> curves,
                              const IntWeights& weights) {
  const InitialForms forms = initial_form_factorization(curves, weights);
  const Weights w = to_weights(weights);

  Rational through_x_point = 0;  // Sum a_i * (power of y in in(f_i))
  Rational through_y_point = 0;  // Sum a_i * (power of x in in(f_i))
  Rational boundary = 0;
  std::vector<Rational> transverse(forms.basis.size());
  for (std::size_t i = 0; i < curves.size(); ++i) {
    const auto& f = forms.per_curve[i];
    through_x_point += coeffs[i] * f.axis_y;
    through_y_point += coeffs[i] * f.axis_x;
    boundary += coeffs[i] * curves[i].weighted_order(w);
    for (const auto& factor : f.factors) transverse[factor.id] += coeffs[i] * factor.multiplicity;
  }

  KollarComponent kc;
  kc.weights = weights;
  kc.ambient_A = w.x + w.y - boundary;
  const Rational d1 = (weights.m1 - 1 + through_x_point) / weights.m1;
  const Rational d2 = (weights.m2 - 1 + through_y_point) / weights.m2;
  if (d1 != 0) kc.different.push_back({1, d1, PointKind::QuotientX});
  if (d2 != 0) kc.different.push_back({1, d2, PointKind::QuotientY});
  for (std::size_t id = 0; id < forms.basis.size(); ++id) {
    if (transverse[id] != 0) kc.different.push_back({forms.basis[id].degree(), transverse[id], PointKind::Transverse});
  }
  return kc;
}

KollarComponent different_divisor(const LogPair& pair, const IntWeights& weights) {
  require_smooth(pair, "different_divisor");
  const auto coeffs = pair.coefficients();
  const auto curves = pair.curves();
  KollarComponent kc = raw_different(coeffs, curves, weights);
  const Rational adjunction = Rational(weights.m1) * weights.m2 * (2 - kc.different_degree());
  if (adjunction != kc.ambient_A) {
    throw Error(ErrorKind::InternalInconsistency, "A(S) = " + to_string(kc.ambient_A) +
                                                      " but m1*m2*(2 - deg Diff) = " + to_string(adjunction));
  }
  for (const auto& c : kc.different) {
    if (c.d >= 1) {
      throw Error(ErrorKind::NotPlt, "different coefficient " + to_string(c.d) + " >= 1 for weights (" +
                                         std::to_string(weights.m1) + "," + std::to_string(weights.m2) + ")");
    }
  }
  return kc;
}

Rational nvol_of_kollar(const KollarComponent& kc) {
  const Rational gap = 2 - kc.different_degree();
  return Rational(kc.weights.m1) * kc.weights.m2 * gap * gap;
}

bool is_kss(const P1Divisor& div) {
  Rational total = 0;
  Rational largest = 0;
  for (const auto& e : div.entries) {
    if (e.count < 1) throw Error(ErrorKind::InvalidArgument, "point class count must be positive");
    if (e.d <= 0 || e.d >= 1) throw Error(ErrorKind::InvalidArgument, "coefficient " + to_string(e.d) + " outside (0,1)");
    total += e.d * e.count;
    if (e.d > largest) largest = e.d;
  }
  if (total >= 2) throw Error(ErrorKind::NotLogFano, "degree of the boundary is " + to_string(total) + " >= 2");
  return largest <= total - largest;
}

Rational delta_plt_grade(const KollarComponent& kc) {
  Rational grade = 1;
  for (const auto& c : kc.different) {
    if (1 - c.d < grade) grade = 1 - c.d;
  }
  return grade;
}

namespace {

// Ray t as coprime weights (m1, m2) with m2/m1 = t.
IntWeights ray_weights(const Rational& t) { return MonomialValuation(Rational(1), t).canonical(); }

bool earlier(const IntWeights& a, const IntWeights& b) {
  if (a.m1 + a.m2 != b.m1 + b.m2) return a.m1 + a.m2 < b.m1 + b.m2;
  return a.m1 < b.m1;
}

// c_i * e_i, the largest coefficient of a component of c_i * div(f_i).
std::vector<Rational> component_coefficients(std::span<const Rational> coeffs, std::span<const PlaneCurve> curves) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < curves.size(); ++i) out.push_back(coeffs[i] * max_factor_multiplicity(curves[i]));
  return out;
}

void require_klt_on_rays(const RayModel& model, std::span<const Rational> component_coeffs) {
  for (const auto& c : component_coeffs) {
    if (c >= 1) throw Error(ErrorKind::NotKltOnMonomialRays, "a boundary component has coefficient " + to_string(c));
  }
  if (model.alpha_at_zero() <= 0) {
    throw Error(ErrorKind::NotKltOnMonomialRays, "coefficient of {x=0} reaches 1 (A -> " +
                                                     to_string(model.alpha_at_zero()) + " as t -> 0)");
  }
  if (model.beta_at_infinity() <= 0) {
    throw Error(ErrorKind::NotKltOnMonomialRays, "coefficient of {y=0} reaches 1 (slope of A at infinity is " +
                                                     to_string(model.beta_at_infinity()) + ")");
  }
  for (const auto& t : model.breakpoints()) {
    if (model.log_discrepancy(t) <= 0) {
      throw Error(ErrorKind::NotKltOnMonomialRays, "A(1," + t.get_str() + ") <= 0");
    }
  }
}

}  // namespace

NvolCertificate minimize_nvol(const LogPair& pair) {
  require_smooth(pair, "minimize_nvol");
  const auto coeffs = pair.coefficients();
  const auto curves = pair.curves();
  const RayModel model(coeffs, curves);
  require_klt_on_rays(model, component_coefficients(coeffs, curves));

  std::vector<Rational> candidates = model.breakpoints();
  for (const auto& piece : model.pieces()) {
    if (piece.alpha > 0 && piece.beta > 0) {
      Rational stationary = piece.alpha / piece.beta;
      if (piece.contains_interior(stationary)) candidates.push_back(std::move(stationary));
    }
  }

  std::optional<Rational> best_value;
  IntWeights best_weights;
  for (const auto& t : candidates) {
    const Rational a = model.log_discrepancy(t);
    const Rational value = a * a / t;
    const IntWeights w = ray_weights(t);
    if (!best_value || value < *best_value || (value == *best_value && earlier(w, best_weights))) {
      best_value = value;
      best_weights = w;
    }
  }

  NvolCertificate cert;
  cert.minimizer = MonomialValuation(best_weights);
  cert.value = *best_value;
  try {
    KollarComponent kc = different_divisor(pair, best_weights);
    if (nvol_of_kollar(kc) != cert.value) {
      throw Error(ErrorKind::InternalInconsistency, "Kollar component volume disagrees with the ray minimum");
    }
    cert.kss = is_kss(P1Divisor::from(kc));
    cert.kollar = std::move(kc);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotPlt) throw;
  }
  cert.certified = cert.kollar.has_value() && cert.kss;
  return cert;
}

LctCertificate certified_lct_of_boundary(const LogPair& pair) {
  require_smooth(pair, "certified_lct_of_boundary");
  if (pair.boundary().empty()) throw Error(ErrorKind::InvalidArgument, "lct of an empty boundary is undefined");
  const auto coeffs = pair.coefficients();
  const auto curves = pair.curves();
  const RayModel model(coeffs, curves);
  const auto components = component_coefficients(coeffs, curves);
  require_klt_on_rays(model, components);

  struct Candidate {
    Rational s;
    LctSource source;
    IntWeights ray;
    std::size_t component = 0;
  };
  std::vector<Candidate> candidates;
  for (const auto& t : model.breakpoints()) {
    candidates.push_back({model.log_discrepancy(t) / model.boundary_order(t), LctSource::Exceptional, ray_weights(t)});
  }
  const RayPiece& first = model.pieces().front();
  const RayPiece& last = model.pieces().back();
  if (first.gamma > 0) candidates.push_back({first.alpha / first.gamma, LctSource::AxisX, IntWeights{1, 0}});
  if (last.delta > 0) candidates.push_back({last.beta / last.delta, LctSource::AxisY, IntWeights{0, 1}});
  for (std::size_t i = 0; i < components.size(); ++i) {
    candidates.push_back({1 / components[i] - 1, LctSource::Component, IntWeights{0, 0}, i});
  }

  // Ties prefer exceptional divisors (they carry the lc place used below),
  // then the smaller ray.
  const Candidate* best = nullptr;
  for (const auto& c : candidates) {
    if (best == nullptr || c.s < best->s ||
        (c.s == best->s && c.source < best->source) ||
        (c.s == best->s && c.source == best->source && c.source == LctSource::Exceptional && earlier(c.ray, best->ray))) {
      best = &c;
    }
  }

  LctCertificate out;
  out.lct = best->s;
  out.source = best->source;
  out.ray = best->ray;
  out.component = best->component;

  std::vector<Rational> scaled;
  for (const auto& a : coeffs) scaled.push_back((1 + out.lct) * a);
  std::vector<IntWeights> witnesses;
  if (best->source == LctSource::Exceptional) witnesses.push_back(best->ray);
  for (const auto& t : model.breakpoints()) witnesses.push_back(ray_weights(t));
  witnesses.push_back(IntWeights{1, 1});
  for (const auto& w : witnesses) {
    const KollarComponent kc = raw_different(scaled, curves, w);
    const bool lc_on_S = std::all_of(kc.different.begin(), kc.different.end(),
                                     [](const PointClass& c) { return c.d <= 1; });
    if (kc.ambient_A >= 0 && lc_on_S) {
      out.certified = true;
      out.lc_witness = w;
      break;
    }
  }
  return out;
}

Rational cone_nvol(const P1Divisor& base, const Rational& r) {
  if (r <= 0) throw Error(ErrorKind::InvalidArgument, "polarization multiple must be positive");
  if (!is_kss(base)) throw Error(ErrorKind::NotKss, "base pair is not K-semistable");
  return (2 - base.degree()) / r;
}

}  // namespace kltvol
