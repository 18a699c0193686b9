#include "kltvol/initial_form.hpp"

#include <limits>
#include <numeric>

#include "kltvol/error.hpp"

namespace kltvol {

namespace {

void require_coprime_positive(const IntWeights& w) {
  if (w.m1 <= 0 || w.m2 <= 0 || std::gcd(w.m1, w.m2) != 1) {
    throw Error(ErrorKind::InvalidArgument, "weights must be coprime positive integers");
  }
}

}  // namespace

std::int64_t InitialFormFactorization::transverse_length() const {
  std::int64_t n = 0;
  for (const auto& f : factors) n += static_cast<std::int64_t>(f.degree) * f.multiplicity;
  return n;
}

DehomogenizedForm dehomogenized_initial_form(const PlaneCurve& curve, const IntWeights& w) {
  require_coprime_positive(w);
  std::int64_t order = std::numeric_limits<std::int64_t>::max();
  for (const auto& [e, c] : curve.terms()) order = std::min(order, w.m1 * e.x + w.m2 * e.y);

  std::vector<std::pair<Exponent, Rational>> edge;
  int a = std::numeric_limits<int>::max();
  int b = std::numeric_limits<int>::max();
  for (const auto& [e, c] : curve.terms()) {
    if (w.m1 * e.x + w.m2 * e.y != order) continue;
    edge.emplace_back(e, c);
    a = std::min(a, e.x);
    b = std::min(b, e.y);
  }

  // After removing x^a y^b the edge terms are x^{(D-k) m2} y^{k m1}.
  int top = 0;
  for (const auto& [e, c] : edge) {
    if ((e.y - b) % w.m1 != 0) throw Error(ErrorKind::InternalInconsistency, "edge term off the lattice line");
    top = std::max(top, static_cast<int>((e.y - b) / w.m1));
  }
  std::vector<Rational> coeffs(top + 1);
  for (const auto& [e, c] : edge) {
    const int k = static_cast<int>((e.y - b) / w.m1);
    if (e.x - a != (top - k) * w.m2) {
      throw Error(ErrorKind::InternalInconsistency, "edge term inconsistent with weights");
    }
    coeffs[k] = c;
  }
  return {a, b, UPoly(std::move(coeffs))};
}

InitialForms initial_form_factorization(std::span<const PlaneCurve> curves, const IntWeights& w) {
  std::vector<DehomogenizedForm> forms;
  std::vector<std::vector<std::pair<UPoly, int>>> sqf;
  std::vector<UPoly> all_parts;
  for (const auto& c : curves) {
    forms.push_back(dehomogenized_initial_form(c, w));
    sqf.push_back(squarefree_decomposition(forms.back().h));
    for (const auto& [s, m] : sqf.back()) all_parts.push_back(s);
  }

  InitialForms out;
  out.basis = coprime_basis(all_parts);
  for (std::size_t i = 0; i < forms.size(); ++i) {
    InitialFormFactorization f;
    f.axis_x = forms[i].axis_x;
    f.axis_y = forms[i].axis_y;
    for (std::size_t id = 0; id < out.basis.size(); ++id) {
      for (const auto& [s, m] : sqf[i]) {
        if (!divmod(s, out.basis[id]).second.is_zero()) continue;
        f.factors.push_back(FormFactor{out.basis[id].degree(), m, id});
        break;
      }
    }
    out.per_curve.push_back(std::move(f));
  }
  return out;
}

InitialFormFactorization initial_form_factorization(const PlaneCurve& curve, const IntWeights& w) {
  return initial_form_factorization(std::span<const PlaneCurve>(&curve, 1), w).per_curve.front();
}

}  // namespace kltvol
