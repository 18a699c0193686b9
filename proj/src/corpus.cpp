#include "kltvol/corpus.hpp"

#include <numeric>
#include <random>

#include "kltvol/error.hpp"
#include "kltvol/kollar.hpp"

namespace kltvol {

namespace {

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  // Uniform-ish integer in [lo, hi] by modulo reduction; portable across
  // standard libraries, unlike std::uniform_int_distribution.
  int range(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
  bool coin() { return (rng_() & 1U) != 0; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[rng_() % v.size()];
  }

 private:
  std::mt19937_64 rng_;
};

PlaneCurve binomial(int p, int q, bool plus) {
  PlaneCurve::Terms t;
  t[{0, q}] = 1;
  t[{p, 0}] = plus ? 1 : -1;
  return PlaneCurve(std::move(t));
}

LogPair draw_monomial(Draw& d, const std::vector<Rational>& coeffs, int box) {
  if (d.coin()) {
    int p = d.range(0, box);
    int q = d.range(0, box);
    if (p + q == 0) p = 1;
    return LogPair::smooth({{d.pick(coeffs), PlaneCurve::monomial(p, q)}});
  }
  return LogPair::smooth({{d.pick(coeffs), PlaneCurve::monomial(d.range(1, box), 0)},
                          {d.pick(coeffs), PlaneCurve::monomial(0, d.range(1, box))}});
}

std::vector<BoundaryTerm> binomial_terms(Draw& d, const std::vector<Rational>& coeffs, int box) {
  const int p = d.range(1, box);
  const int q = d.range(1, box);
  std::vector<BoundaryTerm> b{{d.pick(coeffs), binomial(p, q, d.coin())}};
  switch (d.range(0, 3)) {
    case 1:
      b.push_back({d.pick(coeffs), PlaneCurve::monomial(1, 0)});
      break;
    case 2:
      b.push_back({d.pick(coeffs), PlaneCurve::monomial(0, 1)});
      break;
    default:
      break;
  }
  return b;
}

LogPair draw_tailed(Draw& d, const std::vector<Rational>& coeffs, int box) {
  const int p = d.range(1, box);
  const int q = d.range(1, box);
  PlaneCurve::Terms t;
  t[{0, q}] = 1;
  t[{p, 0}] = -1;
  const int tails = d.range(1, 2);
  for (int i = 0; i < tails; ++i) {
    const int deg = std::max(p, q) + d.range(1, 4);
    const int j = d.range(0, deg);
    t[{deg - j, j}] += d.range(1, 3);
  }
  return LogPair::smooth({{d.pick(coeffs), PlaneCurve(std::move(t))}});
}

LogPair draw_quotient(Draw& d, const std::vector<Rational>& coeffs, int box) {
  const int r = d.range(2, 12);
  int a = d.range(1, r - 1);
  while (std::gcd(a, r) != 1) a = a % (r - 1) + 1;
  const CyclicQuotient g(r, a);
  std::vector<BoundaryTerm> b;
  switch (d.range(0, 3)) {
    case 0:
      break;
    case 1:
      b.push_back({d.pick(coeffs), PlaneCurve::monomial(d.range(1, box), 0)});
      break;
    case 2:
      b.push_back({d.pick(coeffs), PlaneCurve::monomial(d.range(1, box), 0)});
      b.push_back({d.pick(coeffs), PlaneCurve::monomial(0, d.range(1, box))});
      break;
    default: {
      // y^q - x^p is invariant when p = a*q mod r.
      const int q = d.range(1, box);
      int p = (a * q) % r;
      if (p == 0) p = r;
      b.push_back({d.pick(coeffs), binomial(p, q, d.coin())});
      if (d.coin()) b.push_back({d.pick(coeffs), PlaneCurve::monomial(0, 1)});
      break;
    }
  }
  return LogPair(g, std::move(b));
}

bool usable(const LogPair& pair, bool certifiable_only) {
  try {
    if (!pair.smooth_ambient()) {
      minimize_nvol(pair.on_cover());
      return true;
    }
    if (!certifiable_only) {
      minimize_nvol(pair);
      return true;
    }
    return certifiable(pair);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

std::string corpus_kind_name(CorpusKind kind) {
  switch (kind) {
    case CorpusKind::Monomial: return "monomial";
    case CorpusKind::Binomial: return "binomial";
    case CorpusKind::Tailed: return "tailed";
    case CorpusKind::QuotientInvariant: return "quotient";
    case CorpusKind::Mixed: return "mixed";
  }
  return "mixed";
}

CorpusKind parse_corpus_kind(const std::string& name) {
  for (auto k : {CorpusKind::Monomial, CorpusKind::Binomial, CorpusKind::Tailed, CorpusKind::QuotientInvariant,
                 CorpusKind::Mixed}) {
    if (corpus_kind_name(k) == name) return k;
  }
  throw Error(ErrorKind::Parse, "unknown corpus kind '" + name + "'");
}

std::vector<Rational> default_coefficients() {
  return {Rational(1, 6), Rational(1, 5), Rational(1, 4), Rational(1, 3),
          Rational(1, 2), Rational(2, 3), Rational(3, 4)};
}

InstanceCorpus generate_corpus(const CorpusParams& params) {
  if (params.box < 1) throw Error(ErrorKind::InvalidArgument, "corpus box must be positive");
  InstanceCorpus corpus;
  corpus.params = params;
  if (corpus.params.coefficients.empty()) corpus.params.coefficients = default_coefficients();
  const auto& coeffs = corpus.params.coefficients;

  Draw d(params.seed);
  const std::size_t max_draws = params.count * 200 + 100;
  for (std::size_t n = 0; n < max_draws && corpus.instances.size() < params.count; ++n) {
    std::optional<LogPair> pair;
    try {
      switch (params.kind) {
        case CorpusKind::Monomial:
          pair = draw_monomial(d, coeffs, params.box);
          break;
        case CorpusKind::Binomial:
          pair = LogPair::smooth(binomial_terms(d, coeffs, params.box));
          break;
        case CorpusKind::Tailed:
          pair = draw_tailed(d, coeffs, params.box);
          break;
        case CorpusKind::QuotientInvariant:
          pair = draw_quotient(d, coeffs, params.box);
          break;
        case CorpusKind::Mixed:
          pair = (n % 2 == 0) ? draw_monomial(d, coeffs, params.box)
                              : LogPair::smooth(binomial_terms(d, coeffs, params.box));
          break;
      }
    } catch (const Error&) {
      continue;
    }
    if (usable(*pair, params.certifiable_only)) corpus.instances.push_back(std::move(*pair));
  }
  return corpus;
}

InstanceCorpus corpus_of(std::vector<LogPair> instances) {
  InstanceCorpus corpus;
  corpus.params.count = instances.size();
  corpus.params.certifiable_only = false;
  corpus.instances = std::move(instances);
  return corpus;
}

LogPair dk_pair(int k, const Rational& eps) {
  if (k < 3) throw Error(ErrorKind::InvalidArgument, "D_k needs k >= 3");
  const Rational c = (1 - eps) * (Rational(1, k - 1) + Rational(1, k));
  PlaneCurve::Terms t;
  t[{k - 1, 0}] = 1;
  t[{0, k}] = -1;
  return LogPair::smooth({{c, PlaneCurve(std::move(t))}});
}

bool certifiable(const LogPair& pair) {
  if (!minimize_nvol(pair).certified) return false;
  return pair.boundary().empty() || certified_lct_of_boundary(pair).certified;
}

}  // namespace kltvol
