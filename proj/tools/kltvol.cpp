// Command-line front end: volumes, thresholds, Kollar components and the
// verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "kltvol/corpus.hpp"
#include "kltvol/error.hpp"
#include "kltvol/harness.hpp"
#include "kltvol/kollar.hpp"
#include "kltvol/monomial_ideal.hpp"
#include "kltvol/quotient.hpp"
#include "kltvol/serialize.hpp"
#include "kltvol/valuation.hpp"

using namespace kltvol;

namespace {

struct Globals {
  std::string input;
  std::string pair_text;
  std::string output;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
}

std::optional<Json> input_json(const Globals& g) {
  if (!g.pair_text.empty()) return parse_json(g.pair_text);
  if (!g.input.empty()) return parse_json(read_file(g.input));
  return std::nullopt;
}

LogPair input_pair(const Globals& g) {
  const auto j = input_json(g);
  return j ? pair_from_json(*j) : LogPair::smooth();
}

std::optional<std::vector<LogPair>> input_pairs(const Globals& g) {
  const auto j = input_json(g);
  if (!j) return std::nullopt;
  std::vector<LogPair> pairs;
  if (j->is_array()) {
    for (const auto& e : *j) pairs.push_back(pair_from_json(e));
  } else if (j->contains("instances")) {
    for (const auto& e : j->at("instances")) pairs.push_back(pair_from_json(e));
  } else {
    pairs.push_back(pair_from_json(*j));
  }
  return pairs;
}

bool wants_csv(const Globals& g) {
  return g.output.size() >= 4 && g.output.compare(g.output.size() - 4, 4, ".csv") == 0;
}

void emit(const Globals& g, const Json& j, const std::string& csv = {}) {
  const std::string text = (wants_csv(g) && !csv.empty()) ? csv : j.dump(2) + "\n";
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + g.output);
  out << text;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);) {
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(item);
  }
  return out;
}

std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& item : split(s, ',')) out.push_back(parse_rational(item));
  return out;
}

IntWeights parse_weights(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 2) throw Error(ErrorKind::Parse, "weights must look like m1,m2");
  IntWeights w{std::stoll(parts[0]), std::stoll(parts[1])};
  if (w.m1 < 1 || w.m2 < 1 || std::gcd(w.m1, w.m2) != 1) {
    throw Error(ErrorKind::InvalidArgument, "weights must be coprime positive integers");
  }
  return w;
}

// "x^2, x*y, y^3"
MonomialIdeal parse_ideal(const std::string& s) {
  std::vector<Exponent> gens;
  for (const auto& item : split(s, ',')) {
    const PlaneCurve c = PlaneCurve::parse(item);
    if (!c.is_monomial()) throw Error(ErrorKind::Parse, "ideal generator '" + item + "' is not a monomial");
    gens.push_back(c.terms().begin()->first);
  }
  return MonomialIdeal(std::move(gens));
}

struct VerifyOptions {
  std::string theorem;
  std::size_t count = 0;
  int box = 4;
  std::string kind;
  std::string coeffs;
  int steps = 20;
  std::string C;
  std::string epsilon = "1/4";
  std::string weights = "2,3";
  int m_max = 60;
  std::string tolerance = "1/10";
};

InstanceCorpus verify_corpus(const Globals& g, const VerifyOptions& o, CorpusKind kind, std::size_t count,
                             bool certifiable_only) {
  if (auto pairs = input_pairs(g)) return corpus_of(std::move(*pairs));
  CorpusParams p;
  p.kind = o.kind.empty() ? kind : parse_corpus_kind(o.kind);
  p.count = o.count ? o.count : count;
  p.box = o.box;
  p.seed = g.seed;
  p.certifiable_only = certifiable_only;
  p.coefficients = parse_rationals(o.coeffs);
  return generate_corpus(p);
}

void describe_corpus(TheoremReport& r, const InstanceCorpus& c, const Globals& g) {
  r.parameters.emplace_back("instances", std::to_string(c.instances.size()));
  r.parameters.emplace_back("seed", std::to_string(g.seed));
  r.parameters.emplace_back("kind", corpus_kind_name(c.params.kind));
  r.parameters.emplace_back("box", std::to_string(c.params.box));
}

TheoremReport run_verify(const Globals& g, const VerifyOptions& o) {
  const HarnessOptions h{g.jobs};
  TheoremReport report;
  if (o.theorem == "surface-lct-bound") {
    const auto c = verify_corpus(g, o, CorpusKind::Mixed, 200, true);
    report = check_surface_lct_bound(c, h);
    describe_corpus(report, c, g);
  } else if (o.theorem == "truncation") {
    const auto c = verify_corpus(g, o, CorpusKind::Tailed, 100, true);
    report = check_truncation_corpus(c, h);
    describe_corpus(report, c, g);
  } else if (o.theorem == "lipschitz") {
    const auto c = verify_corpus(g, o, CorpusKind::Mixed, 50, true);
    std::optional<Rational> C;
    if (!o.C.empty()) C = parse_rational(o.C);
    report = check_lipschitz_corpus(c, o.steps, C, h);
    describe_corpus(report, c, g);
  } else if (o.theorem == "lct-mult") {
    const IntWeights w = parse_weights(o.weights);
    report = check_lct_mult_convergence(MonomialValuation(w), input_pair(g), o.m_max, parse_rational(o.tolerance));
  } else if (o.theorem == "delta-plt") {
    const auto c = verify_corpus(g, o, CorpusKind::Mixed, 200, true);
    report = check_delta_plt_existence(c, parse_rational(o.epsilon), 12, h);
    describe_corpus(report, c, g);
  } else if (o.theorem == "order-bounds") {
    const auto c = verify_corpus(g, o, CorpusKind::Mixed, 200, false);
    report = check_order_bounds(c, h);
    describe_corpus(report, c, g);
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown theorem id '" + o.theorem + "'");
  }
  return report;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact local volumes of klt surface germs"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--input", g.input, "pair (or list of pairs) as JSON");
  app.add_option("--pair", g.pair_text, "pair as an inline JSON string");
  app.add_option("--output", g.output, "write JSON, or CSV when the name ends in .csv");
  app.add_option("--seed", g.seed, "corpus seed");
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::Range(1U, 1024U));

  auto* nvol = app.add_subcommand("nvol", "minimize the normalized volume");
  auto* lct = app.add_subcommand("lct", "lct of the boundary, or of an ideal");
  std::string ideal;
  lct->add_option("--ideal", ideal, "monomial generators, e.g. \"x^2, y^3\"");
  auto* mult = app.add_subcommand("mult", "multiplicity and colength of a monomial ideal");
  mult->add_option("--ideal", ideal)->required();
  auto* kollar = app.add_subcommand("kollar", "different of a weighted blow-up");
  std::string weights;
  kollar->add_option("--weights", weights, "m1,m2")->required();
  auto* kss = app.add_subcommand("kss", "K-semistability of (P^1, Sum d_i p_i)");
  std::string divisor;
  kss->add_option("--divisor", divisor, "coefficients, e.g. \"1/2,1/2,1/3\"")->required();
  auto* quotient = app.add_subcommand("quotient", "volume on a cyclic quotient");
  std::string spec;
  std::string quotient_eps;
  quotient->add_option("--spec", spec, "Q(r,a)");
  quotient->add_option("--above", quotient_eps, "list all Q(r,a) with 4/r above this value");
  auto* trunc = app.add_subcommand("truncate", "truncate the boundary and compare volumes");
  int k = 0;
  trunc->add_option("-k,--k", k, "drop terms of degree >= k")->required();
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  VerifyOptions vo;
  verify->add_option("theorem", vo.theorem,
                     "surface-lct-bound | truncation | lipschitz | lct-mult | delta-plt | order-bounds")
      ->required();
  verify->add_option("--count", vo.count, "corpus size");
  verify->add_option("--box", vo.box, "exponent bound of the corpus");
  verify->add_option("--kind", vo.kind, "monomial | binomial | tailed | quotient | mixed");
  verify->add_option("--coeffs", vo.coeffs, "coefficient set, e.g. \"1/2,1/3\"");
  verify->add_option("--steps", vo.steps, "sweep steps (lipschitz)");
  verify->add_option("--C", vo.C, "Lipschitz constant; empirical when omitted");
  verify->add_option("--epsilon", vo.epsilon, "volume threshold (delta-plt)");
  verify->add_option("--weights", vo.weights, "valuation weights (lct-mult)");
  verify->add_option("--m-max", vo.m_max, "largest level (lct-mult)");
  verify->add_option("--tolerance", vo.tolerance, "convergence tolerance (lct-mult)");
  auto* acc = app.add_subcommand("enumerate-acc", "certified volumes of monomial boundaries");
  std::string acc_coeffs = "1/2";
  int acc_box = 2;
  std::string acc_eps = "1/10";
  acc->add_option("--coeffs", acc_coeffs, "coefficient set");
  acc->add_option("--box", acc_box, "exponent bound");
  acc->add_option("--epsilon", acc_eps, "lower cut");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*nvol) {
      const LogPair pair = input_pair(g);
      Json j;
      j["pair"] = pair.describe();
      j.update(to_json(quotient_nvol(pair)));
      emit(g, j);
    } else if (*lct) {
      const LogPair pair = input_pair(g);
      Json j;
      j["pair"] = pair.describe();
      if (!ideal.empty()) {
        j["ideal"] = ideal;
        j["lct"] = to_string(lct_ideal(pair, parse_ideal(ideal)));
      } else {
        j.update(to_json(certified_lct_of_boundary(pair)));
      }
      emit(g, j);
    } else if (*mult) {
      const MonomialIdeal I = parse_ideal(ideal);
      Json j;
      j["ideal"] = ideal;
      j["multiplicity"] = to_string(multiplicity(I));
      j["colength"] = colength(I).get_str();
      emit(g, j);
    } else if (*kollar) {
      const LogPair pair = input_pair(g);
      Json j;
      j["pair"] = pair.describe();
      j.update(to_json(different_divisor(pair, parse_weights(weights))));
      emit(g, j);
    } else if (*kss) {
      P1Divisor div;
      for (const auto& d : parse_rationals(divisor)) div.entries.push_back({1, d});
      Json j;
      j["divisor"] = divisor;
      j["degree"] = to_string(div.degree());
      j["kss"] = is_kss(div);
      emit(g, j);
    } else if (*quotient) {
      if (!quotient_eps.empty()) {
        Json list = Json::array();
        for (const auto& [q, v] : enumerate_quotients_with_nvol_above(parse_rational(quotient_eps))) {
          list.push_back({{"quotient", q.to_string()}, {"nvol", to_string(v)}});
        }
        emit(g, Json{{"above", quotient_eps}, {"quotients", list}});
      } else {
        if (spec.empty()) throw Error(ErrorKind::InvalidArgument, "quotient needs --spec or --above");
        const LogPair cover = input_pair(g);
        const CyclicQuotient q = CyclicQuotient::parse(spec);
        const NvolCertificate cert = quotient_nvol(q, cover.boundary());
        Json j;
        j["quotient"] = q.to_string();
        j["pair"] = LogPair(q, cover.boundary()).describe();
        j.update(to_json(cert));
        j["cover_value"] = to_string(cert.value * q.r);
        emit(g, j);
      }
    } else if (*trunc) {
      const LogPair pair = input_pair(g);
      std::vector<BoundaryTerm> cut;
      for (const auto& t : pair.boundary()) cut.push_back({t.coeff, truncate(t.curve, k)});
      const LogPair truncated(pair.ambient(), std::move(cut));
      const NvolCertificate before = quotient_nvol(pair);
      const NvolCertificate after = quotient_nvol(truncated);
      Json j;
      j["k"] = k;
      j["pair"] = to_json(pair);
      j["truncated"] = to_json(truncated);
      j["nvol"] = to_string(before.value);
      j["truncated_nvol"] = to_string(after.value);
      j["unchanged"] = before.value == after.value;
      emit(g, j);
    } else if (*verify) {
      const TheoremReport report = run_verify(g, vo);
      emit(g, to_json(report), report_csv(report));
      std::cerr << report.theorem << ": " << report.passed() << " passed, " << report.failed() << " failed, "
                << report.skipped() << " skipped\n";
      return report.all_ok() ? 0 : 1;
    } else if (*acc) {
      const auto values = enumerate_acc(parse_rationals(acc_coeffs), acc_box, parse_rational(acc_eps), {g.jobs});
      Json j;
      j["coeffs"] = acc_coeffs;
      j["box"] = acc_box;
      j["epsilon"] = acc_eps;
      j["values"] = to_json(values);
      emit(g, j, values_csv(values));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
