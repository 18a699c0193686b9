#include "kltvol/univariate.hpp"

#include "kltvol/error.hpp"

namespace kltvol {

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = coeffs_;
  const Rational lead = leading();
  for (auto& x : c) x /= lead;
  return UPoly(std::move(c));
}

UPoly UPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> c(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UPoly(std::move(c));
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(a.degree() - b.degree() + 1);
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const Rational factor = rem[k] / b.leading();
    if (factor == 0) continue;
    quo[k - db] = factor;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= factor * b.coeffs()[j];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::InternalInconsistency, "inexact polynomial division");
  return q;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
  std::vector<std::pair<UPoly, int>> out;
  if (f.degree() < 1) return out;
  const UPoly fm = f.monic();
  const UPoly df = fm.derivative();
  const UPoly a0 = gcd(fm, df);
  UPoly b = exact_div(fm, a0);
  UPoly c = exact_div(df, a0);
  UPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    const UPoly a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a, i);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
  }
  return out;
}

std::vector<UPoly> coprime_basis(const std::vector<UPoly>& squarefree) {
  std::vector<UPoly> pool;
  for (const auto& p : squarefree) {
    if (p.degree() > 0) pool.push_back(p.monic());
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < pool.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < pool.size() && !changed; ++j) {
        const UPoly g = gcd(pool[i], pool[j]);
        if (g.degree() <= 0) continue;
        UPoly pi = exact_div(pool[i], g);
        UPoly pj = exact_div(pool[j], g);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
        if (pi.degree() > 0) pool.push_back(pi.monic());
        if (pj.degree() > 0) pool.push_back(pj.monic());
        pool.push_back(g);
        changed = true;
      }
    }
  }
  return pool;
}

}  // namespace kltvol
