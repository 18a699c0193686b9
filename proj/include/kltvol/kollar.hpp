#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "kltvol/log_pair.hpp"
#include "kltvol/valuation.hpp"

namespace kltvol {

enum class PointKind {
  QuotientX,   ///< cyclic point of index m1; the strict transform of {y=0} passes here
  QuotientY,   ///< cyclic point of index m2; the strict transform of {x=0} passes here
  Transverse,  ///< smooth points cut out by one coprime factor of the initial forms
};

/// A set of `count` points of S = P^1 sharing the coefficient d of the different.
struct PointClass {
  std::int64_t count = 1;
  Rational d;
  PointKind kind = PointKind::Transverse;
};

/// Exceptional curve of the weighted blow-up with weights (m1, m2) together
/// with the different Delta_S and the log discrepancy A_(X,Delta)(S).
/// Classes with d = 0 are omitted.
struct KollarComponent {
  IntWeights weights;
  std::vector<PointClass> different;
  Rational ambient_A;

  Rational different_degree() const;
};

/// Divisor Sum d_i p_i on P^1, grouped into (count, d) classes.
struct P1Divisor {
  struct Entry {
    std::int64_t count = 1;
    Rational d;
  };
  std::vector<Entry> entries;

  static P1Divisor from(const KollarComponent& kc);
  Rational degree() const;
};

struct NvolCertificate {
  MonomialValuation minimizer{Rational(1), Rational(1)};
  Rational value;
  std::optional<KollarComponent> kollar;
  bool kss = false;
  bool certified = false;
  /// Degree of the cover the value was pushed down along (1 on the plane).
  std::int64_t degree = 1;
};

/// Divisor computing an lct: an exceptional weighted blow-up, one of the
/// coordinate axes, or a component of a boundary curve.
enum class LctSource { Exceptional, AxisX, AxisY, Component };

struct LctCertificate {
  Rational lct;
  bool certified = false;
  LctSource source = LctSource::Exceptional;
  /// Ray computing the threshold; (1,0) and (0,1) stand for the coordinate
  /// divisors {x=0} and {y=0} reached as limits. Unused for Component.
  IntWeights ray;
  /// Index of the boundary curve when source is Component.
  std::size_t component = 0;
  /// Weighted blow-up whose different certified log canonicity, if any.
  std::optional<IntWeights> lc_witness;
};

/// Different and log discrepancy for raw data (coefficients may be >= 1).
/// Used both for Kollar components and for lc certificates of scaled boundaries.
KollarComponent raw_different(std::span<const Rational> coeffs, std::span<const PlaneCurve> curves,
                              const IntWeights& weights);

/// Throws NotPlt when some d >= 1 and InternalInconsistency when
/// ambient_A != m1*m2*(2 - deg Delta_S).
KollarComponent different_divisor(const LogPair& pair, const IntWeights& weights);

/// m1*m2*(2 - deg Delta_S)^2.
Rational nvol_of_kollar(const KollarComponent& kc);

/// K-semistability of (P^1, Sum d_i p_i): max d <= sum of the others.
/// Throws InvalidArgument unless 0 < d < 1 and NotLogFano when deg >= 2.
bool is_kss(const P1Divisor& div);

/// min over classes of (1 - d); 1 for the bare P^1.
Rational delta_plt_grade(const KollarComponent& kc);

/// Exact minimum of the normalized volume over monomial valuations in the
/// given coordinates, certified as the local volume when the minimizing
/// weighted blow-up is plt with K-semistable different.
NvolCertificate minimize_nvol(const LogPair& pair);

/// lct(A^2, Delta; Delta) over monomial rays, certified through an lc
/// weighted blow-up of (1+lct)*Delta.
LctCertificate certified_lct_of_boundary(const LogPair& pair);

/// Local volume of the cone over (P^1, base) polarized by -r(K+base):
/// (2 - deg base)/r. Throws NotKss.
Rational cone_nvol(const P1Divisor& base, const Rational& r);

}  // namespace kltvol
