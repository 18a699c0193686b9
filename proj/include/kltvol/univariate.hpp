#pragma once

#include <utility>
#include <vector>

#include "kltvol/rational.hpp"

namespace kltvol {

/// Dense univariate polynomial over Q, coefficients stored from the constant
/// term upward. The zero polynomial has no coefficients and degree -1.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly constant(const Rational& c);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& t) const;

  UPoly monic() const;
  UPoly derivative() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly&, const UPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a by b (b nonzero).
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

/// Exact quotient; throws InternalInconsistency if b does not divide a.
UPoly exact_div(const UPoly& a, const UPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

/// Yun's squarefree decomposition: f = c * prod s_i^i with each s_i monic,
/// squarefree, pairwise coprime and nonconstant. Returns the (s_i, i) pairs.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f);

/// Refines a list of squarefree polynomials into a pairwise coprime basis of
/// monic nonconstant polynomials such that every input is a product of a
/// subset of the basis.
std::vector<UPoly> coprime_basis(const std::vector<UPoly>& squarefree);

}  // namespace kltvol
