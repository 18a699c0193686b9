#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "kltvol/plane_curve.hpp"

namespace kltvol {

struct SmoothPlane {
  bool operator==(const SmoothPlane&) const = default;
};

/// Cyclic quotient singularity of type (1/r)(1, a): x -> zeta x, y -> zeta^a y.
/// r = 1 (with a = 0) is the smooth point; otherwise 1 <= a < r, gcd(a, r) = 1.
struct CyclicQuotient {
  std::int64_t r = 1;
  std::int64_t a = 0;

  CyclicQuotient() = default;
  CyclicQuotient(std::int64_t r, std::int64_t a);

  /// Parses "Q(r,a)".
  static CyclicQuotient parse(const std::string& text);

  /// True when every monomial of the curve has the same character p + a*q mod r.
  bool is_invariant(const PlaneCurve& curve) const;

  std::string to_string() const;

  bool operator==(const CyclicQuotient&) const = default;
};

using Ambient = std::variant<SmoothPlane, CyclicQuotient>;

struct BoundaryTerm {
  Rational coeff;
  PlaneCurve curve;
};

/// Germ of a pair at the origin: ambient plus Sum coeff_i * div(f_i).
/// Coefficients lie in (0,1), curves are pairwise coprime and, on a quotient
/// ambient, invariant under the group.
class LogPair {
 public:
  LogPair() = default;
  LogPair(Ambient ambient, std::vector<BoundaryTerm> boundary);

  static LogPair smooth(std::vector<BoundaryTerm> boundary = {});

  const Ambient& ambient() const noexcept { return ambient_; }
  const std::vector<BoundaryTerm>& boundary() const noexcept { return boundary_; }

  bool smooth_ambient() const noexcept { return std::holds_alternative<SmoothPlane>(ambient_); }
  bool monomial_boundary() const;

  std::vector<Rational> coefficients() const;
  std::vector<PlaneCurve> curves() const;

  /// Same curves with new coefficients (validated).
  LogPair with_coefficients(const std::vector<Rational>& coeffs) const;

  /// Same boundary read on the cover: ambient replaced by the smooth plane.
  LogPair on_cover() const;

  /// Coordinate swap x <-> y applied to every curve.
  LogPair swapped() const;

  /// Human-readable form such as "A2, 1/2*(y^2 - x^3)".
  std::string describe() const;

 private:
  Ambient ambient_ = SmoothPlane{};
  std::vector<BoundaryTerm> boundary_;
};

/// Throws InvalidArgument unless the pair has the smooth ambient.
void require_smooth(const LogPair& pair, const char* operation);

/// Sum a_i * v(f_i) for the weights w.
Rational boundary_order(const LogPair& pair, const Weights& w);

}  // namespace kltvol
