#include "kltvol/log_pair.hpp"

#include <numeric>
#include <regex>
#include <sstream>

#include "kltvol/error.hpp"

namespace kltvol {

CyclicQuotient::CyclicQuotient(std::int64_t r_, std::int64_t a_) : r(r_), a(a_) {
  if (r < 1) throw Error(ErrorKind::InvalidArgument, "quotient order must be positive");
  if (r == 1) {
    a = 0;
    return;
  }
  if (a < 1 || a >= r || std::gcd(a, r) != 1) {
    throw Error(ErrorKind::InvalidArgument,
                "quotient type (1/" + std::to_string(r) + ")(1," + std::to_string(a) +
                    ") needs 1 <= a < r with gcd(a, r) = 1");
  }
}

CyclicQuotient CyclicQuotient::parse(const std::string& text) {
  static const std::regex re(R"(\s*Q\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw Error(ErrorKind::Parse, "expected Q(r,a), got '" + text + "'");
  return CyclicQuotient(std::stoll(m[1].str()), std::stoll(m[2].str()));
}

bool CyclicQuotient::is_invariant(const PlaneCurve& curve) const {
  if (r == 1) return true;
  auto character = [&](const Exponent& e) { return ((e.x + a * e.y) % r + r) % r; };
  const auto first = character(curve.terms().begin()->first);
  for (const auto& [e, c] : curve.terms()) {
    if (character(e) != first) return false;
  }
  return true;
}

std::string CyclicQuotient::to_string() const {
  return "Q(" + std::to_string(r) + "," + std::to_string(a) + ")";
}

LogPair::LogPair(Ambient ambient, std::vector<BoundaryTerm> boundary)
    : ambient_(std::move(ambient)), boundary_(std::move(boundary)) {
  for (const auto& t : boundary_) {
    if (t.coeff <= 0 || t.coeff >= 1) {
      throw Error(ErrorKind::InvalidArgument, "boundary coefficient " + kltvol::to_string(t.coeff) +
                                                  " outside (0,1)");
    }
  }
  for (std::size_t i = 0; i < boundary_.size(); ++i) {
    for (std::size_t j = i + 1; j < boundary_.size(); ++j) {
      if (!coprime(boundary_[i].curve, boundary_[j].curve)) {
        throw Error(ErrorKind::InvalidArgument, "boundary curves " + boundary_[i].curve.to_string() + " and " +
                                                    boundary_[j].curve.to_string() + " share a factor");
      }
    }
  }
  if (const auto* q = std::get_if<CyclicQuotient>(&ambient_)) {
    for (const auto& t : boundary_) {
      if (!q->is_invariant(t.curve)) {
        throw Error(ErrorKind::NotInvariant, t.curve.to_string() + " is not invariant under " + q->to_string());
      }
    }
  }
}

LogPair LogPair::smooth(std::vector<BoundaryTerm> boundary) {
  return LogPair(SmoothPlane{}, std::move(boundary));
}

bool LogPair::monomial_boundary() const {
  for (const auto& t : boundary_) {
    if (!t.curve.is_monomial()) return false;
  }
  return true;
}

std::vector<Rational> LogPair::coefficients() const {
  std::vector<Rational> out;
  for (const auto& t : boundary_) out.push_back(t.coeff);
  return out;
}

std::vector<PlaneCurve> LogPair::curves() const {
  std::vector<PlaneCurve> out;
  for (const auto& t : boundary_) out.push_back(t.curve);
  return out;
}

LogPair LogPair::with_coefficients(const std::vector<Rational>& coeffs) const {
  if (coeffs.size() != boundary_.size()) throw Error(ErrorKind::InvalidArgument, "coefficient count mismatch");
  std::vector<BoundaryTerm> b = boundary_;
  for (std::size_t i = 0; i < b.size(); ++i) b[i].coeff = coeffs[i];
  return LogPair(ambient_, std::move(b));
}

LogPair LogPair::on_cover() const { return LogPair(SmoothPlane{}, boundary_); }

LogPair LogPair::swapped() const {
  std::vector<BoundaryTerm> b;
  for (const auto& t : boundary_) b.push_back({t.coeff, t.curve.swapped()});
  Ambient amb = ambient_;
  if (const auto* q = std::get_if<CyclicQuotient>(&ambient_); q != nullptr && q->r > 1) {
    // (1/r)(1,a) with coordinates swapped is (1/r)(a^{-1}, 1) = (1/r)(1, a^{-1}).
    std::int64_t inv = 1;
    while ((inv * q->a) % q->r != 1) ++inv;
    amb = CyclicQuotient(q->r, inv);
  }
  return LogPair(amb, std::move(b));
}

std::string LogPair::describe() const {
  std::ostringstream os;
  if (const auto* q = std::get_if<CyclicQuotient>(&ambient_)) {
    os << q->to_string();
  } else {
    os << "A2";
  }
  for (const auto& t : boundary_) os << ", " << t.coeff.get_str() << "*(" << t.curve.to_string() << ")";
  return os.str();
}

void require_smooth(const LogPair& pair, const char* operation) {
  if (!pair.smooth_ambient()) {
    throw Error(ErrorKind::InvalidArgument, std::string(operation) + " needs the smooth ambient A2");
  }
}

Rational boundary_order(const LogPair& pair, const Weights& w) {
  Rational total = 0;
  for (const auto& t : pair.boundary()) total += t.coeff * t.curve.weighted_order(w);
  return total;
}

}  // namespace kltvol
