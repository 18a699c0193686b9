#include "kltvol/harness.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "kltvol/error.hpp"
#include "kltvol/kollar.hpp"
#include "kltvol/monomial_ideal.hpp"

namespace kltvol {

std::size_t TheoremReport::passed() const {
  return std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.skipped && r.ok; });
}

std::size_t TheoremReport::failed() const {
  return std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return !r.skipped && !r.ok; });
}

std::size_t TheoremReport::skipped() const {
  return std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return r.skipped; });
}

std::optional<Rational> TheoremReport::worst_margin() const {
  std::optional<Rational> worst;
  for (const auto& r : records) {
    if (!r.skipped && (!worst || r.margin < *worst)) worst = r.margin;
  }
  return worst;
}

void TheoremReport::append(const TheoremReport& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
  witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
}

std::string digest(const LogPair& pair) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : pair.describe()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

CheckRecord base_record(const LogPair& pair) {
  CheckRecord r;
  r.digest = digest(pair);
  r.instance = pair.describe();
  return r;
}

CheckRecord skip(const LogPair& pair, std::string note) {
  CheckRecord r = base_record(pair);
  r.skipped = true;
  r.note = std::move(note);
  return r;
}

// Internal inconsistencies are defects and must surface as failures; every
// other error means the instance is outside the hypotheses.
CheckRecord from_error(const LogPair& pair, const Error& e) {
  CheckRecord r = base_record(pair);
  r.note = e.what();
  r.skipped = e.kind() != ErrorKind::InternalInconsistency;
  return r;
}

CheckRecord compare(const LogPair& pair, const char* relation, Rational lhs, Rational rhs) {
  CheckRecord r = base_record(pair);
  r.relation = relation;
  const std::string rel = relation;
  if (rel == ">=") {
    r.ok = lhs >= rhs;
    r.margin = lhs - rhs;
  } else if (rel == ">") {
    r.ok = lhs > rhs;
    r.margin = lhs - rhs;
  } else if (rel == "<=") {
    r.ok = lhs <= rhs;
    r.margin = rhs - lhs;
  } else if (rel == "<") {
    r.ok = lhs < rhs;
    r.margin = rhs - lhs;
  } else {
    r.ok = lhs == rhs;
    r.margin = -abs(lhs - rhs);
  }
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

std::string vector_string(const std::vector<Rational>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + t[i].get_str();
  return s + ")";
}

TheoremReport merge(std::string theorem, const std::vector<TheoremReport>& parts) {
  TheoremReport out;
  out.theorem = std::move(theorem);
  for (const auto& p : parts) out.records.insert(out.records.end(), p.records.begin(), p.records.end());
  return out;
}

// --- Lipschitz -------------------------------------------------------------

struct LipschitzSample {
  std::vector<Rational> t;
  Rational base;
  Rational value;
  Rational l1;  // Sum |t_i|
  int sign = 0; // -1: t <= 0, +1: t >= 0, 0: mixed or zero
};

struct LipschitzData {
  LogPair pair;
  std::vector<LipschitzSample> samples;
  std::vector<CheckRecord> skipped;
  std::optional<Rational> empirical;  // max |Delta nvol| / Sum|t|
  std::vector<CheckRecord> sequence;  // sweep ordering records
};

LipschitzData lipschitz_samples(const LogPair& pair, const std::vector<std::vector<Rational>>& perturbations,
                                const Rational& iota) {
  LipschitzData data{pair, {}, {}, std::nullopt, {}};
  Rational base;
  try {
    const NvolCertificate cert = minimize_nvol(pair);
    if (!cert.certified) {
      data.skipped.push_back(skip(pair, "volume not certified"));
      return data;
    }
    base = cert.value;
  } catch (const Error& e) {
    data.skipped.push_back(from_error(pair, e));
    return data;
  }
  const auto coeffs = pair.coefficients();
  for (const auto& t : perturbations) {
    if (t.size() != coeffs.size()) {
      data.skipped.push_back(skip(pair, "perturbation " + vector_string(t) + " has the wrong length"));
      continue;
    }
    std::vector<Rational> moved = coeffs;
    bool admissible = true;
    bool nonpos = true;
    bool nonneg = true;
    Rational l1 = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      moved[i] += t[i];
      l1 += abs(t[i]);
      admissible = admissible && abs(t[i]) <= iota && moved[i] > 0 && moved[i] < 1;
      nonpos = nonpos && t[i] <= 0;
      nonneg = nonneg && t[i] >= 0;
    }
    if (!admissible) {
      data.skipped.push_back(skip(pair, "perturbation " + vector_string(t) + " outside the admissible box"));
      continue;
    }
    try {
      const NvolCertificate moved_cert = minimize_nvol(pair.with_coefficients(moved));
      if (!moved_cert.certified) {
        data.skipped.push_back(skip(pair, "perturbed volume not certified at t=" + vector_string(t)));
        continue;
      }
      LipschitzSample s{t, base, moved_cert.value, l1, l1 == 0 ? 0 : (nonpos ? -1 : (nonneg ? 1 : 0))};
      if (l1 > 0) {
        const Rational ratio = abs(s.value - base) / l1;
        if (!data.empirical || ratio > *data.empirical) data.empirical = ratio;
      }
      data.samples.push_back(std::move(s));
    } catch (const Error& e) {
      CheckRecord r = from_error(pair, e);
      r.note += " at t=" + vector_string(t);
      data.skipped.push_back(std::move(r));
    }
  }
  return data;
}

void lipschitz_records(const LipschitzData& data, const Rational& C, TheoremReport& report) {
  for (const auto& s : data.samples) {
    CheckRecord bound = compare(data.pair, "<=", abs(s.value - s.base), C * s.l1);
    bound.note = "two-sided bound at t=" + vector_string(s.t);
    report.add(std::move(bound));
    if (s.sign != 0) {
      CheckRecord mono = compare(data.pair, s.sign < 0 ? ">=" : "<=", s.value, s.base);
      mono.note = "monotonicity at t=" + vector_string(s.t);
      report.add(std::move(mono));
    }
  }
  for (const auto& r : data.sequence) report.add(r);
  for (const auto& r : data.skipped) report.add(r);
}

// Ordered check along each single-coordinate sweep produced by
// sweep_perturbations: nvol must not increase with the coefficient.
void sweep_sequence(LipschitzData& data, int steps) {
  const std::size_t n = data.pair.boundary().size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::pair<Rational, Rational>> points;  // (coefficient shift, nvol)
    if (!data.samples.empty()) points.emplace_back(Rational(0), data.samples.front().base);
    for (const auto& s : data.samples) {
      bool only_i = true;
      for (std::size_t j = 0; j < n; ++j) only_i = only_i && (j == i || s.t[j] == 0);
      if (only_i && s.t[i] != 0) points.emplace_back(s.t[i], s.value);
    }
    if (points.size() < 2) continue;
    std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Rational worst_rise = points[1].second - points[0].second;
    for (std::size_t j = 1; j < points.size(); ++j) {
      worst_rise = std::max<Rational>(worst_rise, points[j].second - points[j - 1].second);
    }
    CheckRecord r = compare(data.pair, "<=", worst_rise, Rational(0));
    r.note = "largest rise of nvol along the " + std::to_string(steps) + "-step sweep of coefficient " +
             std::to_string(i) + " (" + std::to_string(points.size()) + " certified points)";
    data.sequence.push_back(std::move(r));
  }
}

}  // namespace

// --- 8 * lct >= nvol --------------------------------------------------------

TheoremReport check_surface_lct_bound(const InstanceCorpus& corpus, const HarnessOptions& opt) {
  struct Out {
    CheckRecord record;
    std::optional<Rational> ratio;
  };
  const auto results = parallel_map(corpus.instances.size(), opt.jobs, [&](std::size_t i) -> Out {
    const LogPair& pair = corpus.instances[i];
    if (!pair.smooth_ambient()) return {skip(pair, "quotient ambient"), std::nullopt};
    if (pair.boundary().empty()) return {skip(pair, "lct of the empty boundary is undefined"), std::nullopt};
    try {
      const NvolCertificate nvol = minimize_nvol(pair);
      const LctCertificate lct = certified_lct_of_boundary(pair);
      if (!nvol.certified) return {skip(pair, "volume not certified"), std::nullopt};
      if (!lct.certified) return {skip(pair, "lct not certified"), std::nullopt};
      CheckRecord r = compare(pair, ">=", 8 * lct.lct, nvol.value);
      r.note = "lct " + to_string(lct.lct);
      return {std::move(r), nvol.value / lct.lct};
    } catch (const Error& e) {
      return {from_error(pair, e), std::nullopt};
    }
  });
  TheoremReport report;
  report.theorem = "surface-lct-bound";
  std::optional<Rational> worst;
  std::string worst_instance;
  for (const auto& o : results) {
    report.add(o.record);
    if (o.ratio && (!worst || *o.ratio > *worst)) {
      worst = o.ratio;
      worst_instance = o.record.instance;
    }
  }
  if (worst) {
    report.witness("max_nvol_over_lct", to_string(*worst));
    report.witness("max_nvol_over_lct_instance", worst_instance);
  }
  return report;
}

// --- Lipschitz --------------------------------------------------------------

TheoremReport check_lipschitz(const LogPair& pair, const std::vector<std::vector<Rational>>& perturbations,
                              const std::optional<Rational>& C, const Rational& iota) {
  const LipschitzData data = lipschitz_samples(pair, perturbations, iota);
  TheoremReport report;
  report.theorem = "lipschitz";
  const Rational used = C ? *C : data.empirical.value_or(Rational(0));
  lipschitz_records(data, used, report);
  report.witness("empirical_C", to_string(data.empirical.value_or(Rational(0))));
  report.witness("C", to_string(used));
  return report;
}

std::vector<std::vector<Rational>> sweep_perturbations(const LogPair& pair, int steps) {
  if (steps < 1) throw Error(ErrorKind::InvalidArgument, "sweep needs at least one step");
  const auto coeffs = pair.coefficients();
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (int j = 1; j <= steps; ++j) {
      std::vector<Rational> down(coeffs.size(), Rational(0));
      std::vector<Rational> up(coeffs.size(), Rational(0));
      down[i] = -coeffs[i] * j / (steps + 1);
      up[i] = (1 - coeffs[i]) * j / (steps + 1);
      out.push_back(std::move(down));
      out.push_back(std::move(up));
    }
  }
  return out;
}

TheoremReport check_lipschitz_corpus(const InstanceCorpus& corpus, int steps, const std::optional<Rational>& C,
                                     const HarnessOptions& opt) {
  auto data = parallel_map(corpus.instances.size(), opt.jobs, [&](std::size_t i) {
    const LogPair& pair = corpus.instances[i];
    if (!pair.smooth_ambient()) return LipschitzData{pair, {}, {skip(pair, "quotient ambient")}, std::nullopt, {}};
    LipschitzData d = lipschitz_samples(pair, sweep_perturbations(pair, steps), Rational(1));
    sweep_sequence(d, steps);
    return d;
  });
  std::optional<Rational> empirical;
  for (const auto& d : data) {
    if (d.empirical && (!empirical || *d.empirical > *empirical)) empirical = d.empirical;
  }
  const Rational used = C ? *C : empirical.value_or(Rational(0));
  TheoremReport report;
  report.theorem = "lipschitz";
  report.parameters.emplace_back("steps", std::to_string(steps));
  for (const auto& d : data) lipschitz_records(d, used, report);
  report.witness("empirical_C", to_string(empirical.value_or(Rational(0))));
  report.witness("C", to_string(used));
  return report;
}

// --- truncation -------------------------------------------------------------

TheoremReport check_truncation(const LogPair& pair, int extra) {
  TheoremReport report;
  report.theorem = "truncation";
  NvolCertificate cert;
  try {
    if (!pair.smooth_ambient()) {
      report.add(skip(pair, "quotient ambient"));
      return report;
    }
    cert = minimize_nvol(pair);
  } catch (const Error& e) {
    report.add(from_error(pair, e));
    return report;
  }
  if (!cert.certified) {
    report.add(skip(pair, "volume not certified"));
    return report;
  }
  const IntWeights w = cert.minimizer.canonical();
  const Rational vm = cert.minimizer.of_maximal_ideal();
  Integer worst = 0;
  for (const auto& t : pair.boundary()) worst = std::max(worst, floor(cert.minimizer(t.curve) / vm));
  const int k0 = static_cast<int>(to_int64(worst)) + 1;
  report.witness("k0", std::to_string(k0));

  for (int k = k0; k <= k0 + extra; ++k) {
    try {
      std::vector<BoundaryTerm> cut;
      for (const auto& t : pair.boundary()) cut.push_back({t.coeff, truncate(t.curve, k)});
      const LogPair truncated(pair.ambient(), std::move(cut));
      const NvolCertificate tc = minimize_nvol(truncated);
      CheckRecord r = compare(pair, "==", tc.value, cert.value);
      const IntWeights tw = tc.minimizer.canonical();
      r.ok = r.ok && tw == w && tc.certified;
      r.note = "k=" + std::to_string(k) + " weights (" + std::to_string(tw.m1) + "," + std::to_string(tw.m2) + ")";
      report.add(std::move(r));
    } catch (const Error& e) {
      CheckRecord r = base_record(pair);
      r.note = "k=" + std::to_string(k) + " " + e.what();
      report.add(std::move(r));
    }
  }
  return report;
}

TheoremReport check_truncation_corpus(const InstanceCorpus& corpus, const HarnessOptions& opt) {
  const auto parts = parallel_map(corpus.instances.size(), opt.jobs,
                                  [&](std::size_t i) { return check_truncation(corpus.instances[i]); });
  TheoremReport report = merge("truncation", parts);
  int max_k0 = 0;
  for (const auto& p : parts) {
    for (const auto& [k, v] : p.witnesses) {
      if (k == "k0") max_k0 = std::max(max_k0, std::stoi(v));
    }
  }
  report.witness("max_k0", std::to_string(max_k0));
  return report;
}

// --- ACC enumeration --------------------------------------------------------

std::vector<Rational> enumerate_acc(const std::vector<Rational>& coeff_set, int box, const Rational& epsilon,
                                    const HarnessOptions& opt) {
  if (box < 0) throw Error(ErrorKind::InvalidArgument, "box must be nonnegative");
  std::vector<Exponent> monomials;
  for (int p = 0; p <= box; ++p) {
    for (int q = 0; q <= box; ++q) {
      if (p + q > 0) monomials.push_back({p, q});
    }
  }
  // Monomials are coprime exactly when they share no variable.
  auto disjoint = [](const Exponent& a, const Exponent& b) {
    return (a.x == 0 || b.x == 0) && (a.y == 0 || b.y == 0);
  };
  std::vector<std::vector<Exponent>> supports{{}};
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    supports.push_back({monomials[i]});
    for (std::size_t j = i + 1; j < monomials.size(); ++j) {
      if (!disjoint(monomials[i], monomials[j])) continue;
      supports.push_back({monomials[i], monomials[j]});
      for (std::size_t k = j + 1; k < monomials.size(); ++k) {
        if (disjoint(monomials[i], monomials[k]) && disjoint(monomials[j], monomials[k])) {
          supports.push_back({monomials[i], monomials[j], monomials[k]});
        }
      }
    }
  }

  const auto values = parallel_map(supports.size(), opt.jobs, [&](std::size_t s) {
    std::set<Rational> found;
    const auto& support = supports[s];
    const std::size_t n = support.size();
    if (n > 0 && coeff_set.empty()) return found;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      std::vector<BoundaryTerm> b;
      for (std::size_t c = 0; c < n; ++c) b.push_back({coeff_set[idx[c]], PlaneCurve::monomial(support[c].x, support[c].y)});
      try {
        const NvolCertificate cert = minimize_nvol(LogPair::smooth(std::move(b)));
        if (cert.certified && cert.value > epsilon) found.insert(cert.value);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::InternalInconsistency) throw;
      }
      std::size_t c = 0;
      while (c < n && ++idx[c] == coeff_set.size()) idx[c++] = 0;
      if (c == n) break;
    }
    return found;
  });
  std::set<Rational> all;
  for (const auto& v : values) all.insert(v.begin(), v.end());
  return {all.begin(), all.end()};
}

// --- lct^2 * e convergence --------------------------------------------------

TheoremReport check_lct_mult_convergence(const MonomialValuation& v, const LogPair& pair, int m_max,
                                         const Rational& tolerance) {
  if (m_max < 1) throw Error(ErrorKind::InvalidArgument, "m_max must be positive");
  TheoremReport report;
  report.theorem = "lct-mult";
  report.parameters.emplace_back("weights", to_string(v.weights().x) + "," + to_string(v.weights().y));
  report.parameters.emplace_back("m_max", std::to_string(m_max));
  report.parameters.emplace_back("tolerance", to_string(tolerance));

  const Rational target = nvol_of(pair, v).nvol;
  std::optional<Rational> min_s;
  Rational last;
  for (int m = 1; m <= m_max; ++m) {
    const MonomialIdeal am = valuation_ideal(v, Rational(m));
    const Rational lct = lct_ideal(pair, am);
    const Rational s = lct * lct * multiplicity(am);
    CheckRecord r = compare(pair, ">=", s, target);
    r.note = "m=" + std::to_string(m) + " lct " + to_string(lct);
    report.add(std::move(r));
    if (!min_s || s < *min_s) min_s = s;
    last = s;
  }
  CheckRecord close = compare(pair, "<=", abs(last - target), tolerance);
  close.note = "|s_" + std::to_string(m_max) + " - nvol(v)|";
  report.add(std::move(close));

  report.witness("nvol_v", to_string(target));
  report.witness("min_s", to_string(*min_s));
  // s_m >= nvol(x, X, Delta) always holds, with the local volume in place of
  // nvol(v); recorded here for comparison with the per-valuation bound.
  if (pair.smooth_ambient()) {
    try {
      const NvolCertificate local = minimize_nvol(pair);
      report.witness("local_nvol", to_string(local.value));
      report.witness("local_nvol_certified", local.certified ? "true" : "false");
      report.witness("min_s_ge_local_nvol", *min_s >= local.value ? "true" : "false");
    } catch (const Error&) {
    }
  }
  return report;
}

// --- order bounds -----------------------------------------------------------

TheoremReport check_order_bounds(const InstanceCorpus& corpus, const HarnessOptions& opt) {
  const auto parts = parallel_map(corpus.instances.size(), opt.jobs, [&](std::size_t i) {
    const LogPair& pair = corpus.instances[i];
    TheoremReport part;
    if (!pair.smooth_ambient()) {
      part.add(skip(pair, "quotient ambient"));
      return part;
    }
    if (pair.monomial_boundary()) {
      try {
        CheckRecord r = compare(pair, "<=", lct_ideal(pair, MonomialIdeal::maximal()), Rational(2));
        r.note = "lct of the maximal ideal";
        part.add(std::move(r));
      } catch (const Error& e) {
        part.add(from_error(pair, e));
      }
    } else {
      part.add(skip(pair, "lct of the maximal ideal needs a monomial boundary"));
    }
    for (const auto& t : pair.boundary()) {
      const LogPair single = LogPair::smooth({t});
      try {
        const LctCertificate lct = certified_lct_of_boundary(single);
        if (!lct.certified || lct.lct <= 0) {
          part.add(skip(single, "klt not certified"));
          continue;
        }
        CheckRecord r = compare(single, "<", Rational(t.curve.order()), 2 / t.coeff);
        r.note = "ord(f) < 2/c";
        part.add(std::move(r));
      } catch (const Error& e) {
        part.add(from_error(single, e));
      }
    }
    return part;
  });
  return merge("order-bounds", parts);
}

// --- delta-plt ---------------------------------------------------------------

TheoremReport check_delta_plt_existence(const InstanceCorpus& corpus, const Rational& epsilon, int k_max,
                                        const HarnessOptions& opt) {
  struct Out {
    CheckRecord record;
    std::optional<Rational> grade;
  };
  const auto results = parallel_map(corpus.instances.size(), opt.jobs, [&](std::size_t i) -> Out {
    const LogPair& pair = corpus.instances[i];
    if (!pair.smooth_ambient()) return {skip(pair, "quotient ambient"), std::nullopt};
    try {
      const NvolCertificate cert = minimize_nvol(pair);
      if (!cert.certified) return {skip(pair, "volume not certified"), std::nullopt};
      if (cert.value <= epsilon) return {skip(pair, "nvol " + to_string(cert.value) + " <= epsilon"), std::nullopt};
      const Rational grade = delta_plt_grade(*cert.kollar);
      CheckRecord r = compare(pair, ">", grade, Rational(0));
      r.note = "plt grade, nvol " + to_string(cert.value);
      return {std::move(r), grade};
    } catch (const Error& e) {
      return {from_error(pair, e), std::nullopt};
    }
  });
  TheoremReport report;
  report.theorem = "delta-plt";
  report.parameters.emplace_back("epsilon", to_string(epsilon));
  std::optional<Rational> min_grade;
  for (const auto& o : results) {
    report.add(o.record);
    if (o.grade && (!min_grade || *o.grade < *min_grade)) min_grade = o.grade;
  }
  if (min_grade) report.witness("min_grade", to_string(*min_grade));

  for (int k = 3; k <= k_max; ++k) {
    const LogPair pair = dk_pair(k, epsilon);
    try {
      const NvolCertificate cert = minimize_nvol(pair);
      const Rational grade = cert.kollar ? delta_plt_grade(*cert.kollar) : Rational(0);
      CheckRecord r = compare(pair, "==", grade, Rational(1, k));
      r.ok = r.ok && cert.certified && cert.value > epsilon && cert.minimizer.canonical() == IntWeights{k, k - 1};
      r.note = "D_" + std::to_string(k) + " grade == 1/k, nvol " + to_string(cert.value) + " > " + to_string(epsilon);
      report.add(std::move(r));
    } catch (const Error& e) {
      CheckRecord r = base_record(pair);
      r.note = std::string("D_k: ") + e.what();
      report.add(std::move(r));
    }
  }
  return report;
}

}  // namespace kltvol
