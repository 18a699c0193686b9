#include "kltvol/plane_curve.hpp"

#include <algorithm>
#include <climits>
#include <cctype>
#include <limits>
#include <sstream>
#include <vector>

#include "kltvol/error.hpp"
#include "kltvol/univariate.hpp"

namespace kltvol {

Weights to_weights(const IntWeights& w) {
  return {make_rational(w.m1), make_rational(w.m2)};
}

PlaneCurve::PlaneCurve(Terms terms) {
  for (auto& [e, c] : terms) {
    if (e.x < 0 || e.y < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
    if (c != 0) terms_.emplace(e, c);
  }
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "curve has empty support");
  if (terms_.count(Exponent{0, 0}) != 0) {
    throw Error(ErrorKind::InvalidArgument, "curve has a constant term (does not pass through the origin)");
  }
}

PlaneCurve PlaneCurve::monomial(int p, int q) {
  return PlaneCurve(Terms{{Exponent{p, q}, Rational(1)}});
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) src_.push_back(c);
    }
  }

  PlaneCurve::Terms parse() {
    PlaneCurve::Terms terms;
    if (src_.empty()) fail("empty expression");
    bool first = true;
    while (pos_ < src_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [e, c] = term();
      terms[e] += sign * c;
      first = false;
    }
    return terms;
  }

 private:
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
  char get() { return src_[pos_++]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::Parse, why + " at position " + std::to_string(pos_) + " in '" + src_ + "'");
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(src_.substr(start, pos_ - start), 10);
  }

  int exponent() {
    const Integer z = digits();
    if (!z.fits_sint_p()) fail("exponent out of range");
    return static_cast<int>(z.get_si());
  }

  std::pair<Exponent, Rational> term() {
    Exponent e;
    Rational c = 1;
    bool expect_factor = true;
    while (expect_factor) {
      const char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        Rational q(digits());
        if (peek() == '/') {
          ++pos_;
          const Integer den = digits();
          if (den == 0) fail("zero denominator");
          q /= Rational(den);
        }
        c *= q;
      } else if (ch == 'x' || ch == 'y') {
        ++pos_;
        int p = 1;
        if (peek() == '^') {
          ++pos_;
          p = exponent();
        }
        (ch == 'x' ? e.x : e.y) += p;
      } else {
        fail("expected a coefficient, x or y");
      }
      // Factors are joined by '*'; juxtaposition such as 2x^2y is also accepted.
      if (peek() == '*') {
        ++pos_;
        expect_factor = true;
      } else {
        const char nx = peek();
        expect_factor = nx == 'x' || nx == 'y' || std::isdigit(static_cast<unsigned char>(nx));
      }
    }
    return {e, c};
  }

  std::string src_;
  std::size_t pos_ = 0;
};

}  // namespace

PlaneCurve PlaneCurve::parse(std::string_view text) {
  PlaneCurve::Terms terms = Parser(text).parse();
  std::erase_if(terms, [](const auto& kv) { return kv.second == 0; });
  if (terms.empty()) throw Error(ErrorKind::Parse, "expression is identically zero");
  return PlaneCurve(std::move(terms));
}

int PlaneCurve::order() const {
  int best = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) best = std::min(best, e.x + e.y);
  return best;
}

int PlaneCurve::degree() const {
  int best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e.x + e.y);
  return best;
}

int PlaneCurve::x_multiplicity() const {
  int best = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) best = std::min(best, e.x);
  return best;
}

int PlaneCurve::y_multiplicity() const {
  int best = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) best = std::min(best, e.y);
  return best;
}

Rational PlaneCurve::weighted_order(const Weights& w) const {
  bool first = true;
  Rational best;
  for (const auto& [e, c] : terms_) {
    Rational v = w.x * e.x + w.y * e.y;
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

PlaneCurve PlaneCurve::swapped() const {
  Terms t;
  for (const auto& [e, c] : terms_) t.emplace(Exponent{e.y, e.x}, c);
  return PlaneCurve(std::move(t));
}

std::string PlaneCurve::to_string() const {
  std::ostringstream os;
  bool first = true;
  // Highest total degree last reads naturally for germs: y^2 - x^3.
  std::vector<std::pair<Exponent, Rational>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    const int da = a.first.x + a.first.y;
    const int db = b.first.x + b.first.y;
    if (da != db) return da < db;
    return a.first.y > b.first.y;
  });
  for (const auto& [e, c] : ordered) {
    Rational mag = abs(c);
    if (c < 0) {
      os << (first ? "-" : " - ");
    } else if (!first) {
      os << " + ";
    }
    bool need_star = false;
    if (mag != 1) {
      os << mag.get_str();
      need_star = true;
    }
    auto factor = [&](char var, int p) {
      if (p == 0) return;
      if (need_star) os << '*';
      os << var;
      if (p != 1) os << '^' << p;
      need_star = true;
    };
    factor('x', e.x);
    factor('y', e.y);
    first = false;
  }
  return os.str();
}

PlaneCurve operator*(const PlaneCurve& a, const PlaneCurve& b) {
  PlaneCurve::Terms t;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) t[Exponent{ea.x + eb.x, ea.y + eb.y}] += ca * cb;
  }
  return PlaneCurve(std::move(t));
}

Rational weighted_order(const PlaneCurve& curve, const Weights& w) { return curve.weighted_order(w); }

PlaneCurve truncate(const PlaneCurve& curve, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "truncation degree must be >= 1");
  PlaneCurve::Terms kept;
  for (const auto& [e, c] : curve.terms()) {
    if (e.x + e.y < k) kept.emplace(e, c);
  }
  if (kept.empty()) {
    throw Error(ErrorKind::EmptyTruncation, "truncating " + curve.to_string() + " below degree " +
                                                std::to_string(k) + " leaves nothing");
  }
  return PlaneCurve(std::move(kept));
}

namespace {

// f as a polynomial in y whose coefficients are polynomials in x.
std::vector<UPoly> as_poly_in_y(const PlaneCurve& f) {
  const int dy = std::max_element(f.terms().begin(), f.terms().end(), [](const auto& a, const auto& b) {
                   return a.first.y < b.first.y;
                 })->first.y;
  std::vector<std::vector<Rational>> raw(dy + 1);
  for (const auto& [e, c] : f.terms()) {
    auto& row = raw[e.y];
    if (static_cast<int>(row.size()) <= e.x) row.resize(e.x + 1);
    row[e.x] += c;
  }
  std::vector<UPoly> out;
  out.reserve(raw.size());
  for (auto& row : raw) out.emplace_back(std::move(row));
  return out;
}

UPoly content(const std::vector<UPoly>& coeffs) {
  UPoly g;
  for (const auto& c : coeffs) g = gcd(g, c);
  return g;
}

UPoly specialize(const std::vector<UPoly>& coeffs, const Rational& x0) {
  std::vector<Rational> c;
  c.reserve(coeffs.size());
  for (const auto& p : coeffs) c.push_back(p(x0));
  return UPoly(std::move(c));
}

}  // namespace

bool coprime(const PlaneCurve& f, const PlaneCurve& g) {
  auto fy = as_poly_in_y(f);
  auto gy = as_poly_in_y(g);
  const UPoly cf = content(fy);
  const UPoly cg = content(gy);
  if (gcd(cf, cg).degree() > 0) return false;
  const int df = static_cast<int>(fy.size()) - 1;
  const int dg = static_cast<int>(gy.size()) - 1;
  if (df == 0 || dg == 0) return true;
  for (auto& c : fy) c = exact_div(c, cf);
  for (auto& c : gy) c = exact_div(c, cg);
  int dxf = 0;
  int dxg = 0;
  for (const auto& c : fy) dxf = std::max(dxf, c.degree());
  for (const auto& c : gy) dxg = std::max(dxg, c.degree());
  // Res_y of the primitive parts is a polynomial in x of degree at most
  // `bound`; it vanishes identically iff they share a factor involving y.
  const long bound = static_cast<long>(dxf) * dg + static_cast<long>(dxg) * df;
  long nonvanishing_points = 0;
  for (long x0 = 0; nonvanishing_points <= bound; ++x0) {
    const Rational at(x0);
    if (fy.back()(at) == 0 || gy.back()(at) == 0) continue;
    ++nonvanishing_points;
    if (gcd(specialize(fy, at), specialize(gy, at)).degree() == 0) return true;
  }
  return false;
}

int max_factor_multiplicity(const PlaneCurve& f) {
  auto fy = as_poly_in_y(f);
  const UPoly cont = content(fy);
  int best = 0;
  for (const auto& [part, e] : squarefree_decomposition(cont)) best = std::max(best, e);
  if (fy.size() == 1) return best;
  for (auto& c : fy) c = exact_div(c, cont);
  const int dy = static_cast<int>(fy.size()) - 1;
  int dx = 0;
  for (const auto& c : fy) dx = std::max(dx, c.degree());
  // Specializing x can only merge factors, never split a repeated one, and it
  // merges them only at roots of the discriminant (degree <= 2*dx*dy) or of
  // the leading coefficient. The minimum over enough points is exact.
  const long needed = 2L * dx * dy + 1;
  int primitive = INT_MAX;
  long good = 0;
  for (long x0 = 0; good < needed; ++x0) {
    const Rational at(x0);
    if (fy.back()(at) == 0) continue;
    ++good;
    int here = 0;
    for (const auto& [part, e] : squarefree_decomposition(specialize(fy, at))) here = std::max(here, e);
    primitive = std::min(primitive, here);
    if (primitive == 1) break;
  }
  return std::max(best, primitive);
}

}  // namespace kltvol
