#include "kltvol/ray_model.hpp"

#include <algorithm>

#include "kltvol/error.hpp"

namespace kltvol {

RayModel::RayModel(std::span<const Rational> coeffs, std::span<const PlaneCurve> curves)
    : coeffs_(coeffs.begin(), coeffs.end()) {
  if (coeffs.size() != curves.size()) throw Error(ErrorKind::InvalidArgument, "coefficient/curve count mismatch");
  for (const auto& c : curves) {
    diagrams_.push_back(newton_diagram(c));
    for (const auto& f : diagrams_.back().facets) breakpoints_.push_back(make_rational(f.normal.m2, f.normal.m1));
  }
  std::sort(breakpoints_.begin(), breakpoints_.end());
  breakpoints_.erase(std::unique(breakpoints_.begin(), breakpoints_.end()), breakpoints_.end());

  auto make_piece = [&](Rational lo, std::optional<Rational> hi, const Rational& sample) {
    RayPiece p;
    p.lo = std::move(lo);
    p.hi = std::move(hi);
    p.gamma = 0;
    p.delta = 0;
    for (std::size_t i = 0; i < diagrams_.size(); ++i) {
      const Exponent& e = diagrams_[i].active_vertex(sample);
      p.gamma += coeffs_[i] * e.x;
      p.delta += coeffs_[i] * e.y;
    }
    p.alpha = 1 - p.gamma;
    p.beta = 1 - p.delta;
    pieces_.push_back(std::move(p));
  };

  if (breakpoints_.empty()) {
    make_piece(Rational(0), std::nullopt, Rational(1));
    return;
  }
  make_piece(Rational(0), breakpoints_.front(), breakpoints_.front() / 2);
  for (std::size_t j = 0; j + 1 < breakpoints_.size(); ++j) {
    make_piece(breakpoints_[j], breakpoints_[j + 1], (breakpoints_[j] + breakpoints_[j + 1]) / 2);
  }
  make_piece(breakpoints_.back(), std::nullopt, breakpoints_.back() + 1);
}

Rational RayModel::boundary_order(const Rational& t) const {
  Rational total = 0;
  const Weights w{Rational(1), t};
  for (std::size_t i = 0; i < diagrams_.size(); ++i) total += coeffs_[i] * diagrams_[i].weighted_order(w);
  return total;
}

}  // namespace kltvol
