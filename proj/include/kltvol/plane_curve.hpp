#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "kltvol/rational.hpp"

namespace kltvol {

/// Exponent (p, q) of the monomial x^p y^q.
struct Exponent {
  int x = 0;
  int y = 0;

  auto operator<=>(const Exponent&) const = default;
};

/// Positive rational weight pair; x carries weight `x`, y carries weight `y`.
struct Weights {
  Rational x;
  Rational y;
};

/// Coprime positive integer weights (m1 on x, m2 on y).
struct IntWeights {
  std::int64_t m1 = 1;
  std::int64_t m2 = 1;

  bool operator==(const IntWeights&) const = default;
};

Weights to_weights(const IntWeights& w);

/// Plane curve germ at the origin: a polynomial with rational coefficients,
/// nonempty support and no constant term.
class PlaneCurve {
 public:
  using Terms = std::map<Exponent, Rational>;

  /// Drops zero coefficients, then validates. Throws InvalidArgument on an
  /// empty support, a constant term or a negative exponent.
  explicit PlaneCurve(Terms terms);

  /// Parses the term grammar `c*x^p*y^q` joined by `+`/`-`.
  static PlaneCurve parse(std::string_view text);

  /// x^p y^q with coefficient 1.
  static PlaneCurve monomial(int p, int q);

  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  /// ord at the origin: min total degree over the support.
  int order() const;
  int degree() const;

  /// Largest power of x (resp. y) dividing the polynomial.
  int x_multiplicity() const;
  int y_multiplicity() const;

  bool is_monomial() const noexcept { return terms_.size() == 1; }

  /// Brute-force minimum of p*w.x + q*w.y over the support.
  Rational weighted_order(const Weights& w) const;

  /// The curve under the coordinate swap x <-> y.
  PlaneCurve swapped() const;

  std::string to_string() const;

  friend PlaneCurve operator*(const PlaneCurve& a, const PlaneCurve& b);
  friend bool operator==(const PlaneCurve&, const PlaneCurve&) = default;

 private:
  Terms terms_;
};

/// Brute-force weighted order; same as curve.weighted_order(w).
Rational weighted_order(const PlaneCurve& curve, const Weights& w);

/// Drops every term of total degree >= k. Throws EmptyTruncation when no term
/// survives and InvalidArgument when k < 1.
PlaneCurve truncate(const PlaneCurve& curve, int k);

/// True when the two polynomials share no nonconstant factor over Q.
bool coprime(const PlaneCurve& f, const PlaneCurve& g);

/// Largest e such that g^e divides f for a nonconstant g: the multiplicity
/// of the most repeated irreducible component of div(f).
int max_factor_multiplicity(const PlaneCurve& f);

}  // namespace kltvol
