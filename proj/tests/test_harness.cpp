#include <fstream>
#include <sstream>

#include "doctest.h"
#include "kltvol/corpus.hpp"
#include "kltvol/harness.hpp"
#include "kltvol/serialize.hpp"
#include "support.hpp"

using namespace kltvol;
using kltvol::test::Q;
using kltvol::test::smooth;

namespace {

std::vector<Rational> read_golden(const std::string& name) {
  std::ifstream in(std::string(KLTVOL_GOLDEN_DIR) + "/" + name);
  std::vector<Rational> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(parse_rational(line));
  }
  return out;
}

}  // namespace

TEST_CASE("digest is stable") {
  const LogPair p = smooth({{"1/2", "x^2 - y^3"}});
  CHECK(digest(p) == digest(smooth({{"1/2", "x^2 - y^3"}})));
  CHECK(digest(p) != digest(smooth({{"1/3", "x^2 - y^3"}})));
  CHECK(digest(p).size() == 16);
}

TEST_CASE("parallel map keeps order") {
  const auto v = parallel_map(1000, 8, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == i * i);
  CHECK(parallel_map(0, 4, [](std::size_t i) { return i; }).empty());
}

TEST_CASE("corpus regeneration is deterministic") {
  const CorpusParams p{{}, 4, 40, 99, CorpusKind::Mixed, true};
  const InstanceCorpus a = generate_corpus(p);
  const InstanceCorpus b = generate_corpus(p);
  REQUIRE(a.instances.size() == b.instances.size());
  for (std::size_t i = 0; i < a.instances.size(); ++i) CHECK(a.instances[i].describe() == b.instances[i].describe());
  const InstanceCorpus c = generate_corpus({{}, 4, 40, 100, CorpusKind::Mixed, true});
  bool differs = false;
  for (std::size_t i = 0; i < std::min(a.instances.size(), c.instances.size()); ++i) {
    differs = differs || a.instances[i].describe() != c.instances[i].describe();
  }
  CHECK(differs);
}

TEST_CASE("surface lct bound examples") {
  const TheoremReport r = check_surface_lct_bound(
      corpus_of({dk_pair(3, Q("1/4")), smooth({{"1/2", "x"}, {"1/2", "y"}}), LogPair::smooth()}));
  REQUIRE(r.records.size() == 3);
  CHECK(r.records[0].lhs == Q("8/3"));
  CHECK(r.records[0].rhs == Q("25/96"));
  CHECK(r.records[0].ok);
  CHECK(r.records[1].lhs == 8);
  CHECK(r.records[1].rhs == 1);
  CHECK(r.records[2].skipped);
  CHECK(r.passed() == 2);
  CHECK(r.skipped() == 1);
  CHECK(r.all_ok());
}

TEST_CASE("uncertified instances are skipped, never passed") {
  const TheoremReport r = check_surface_lct_bound(corpus_of({smooth({{"1/2", "y - x"}})}));
  CHECK(r.skipped() == 1);
  CHECK(r.passed() == 0);
}

TEST_CASE("Lipschitz examples") {
  const LogPair dk = dk_pair(3, Q("1/4"));
  const TheoremReport down = check_lipschitz(dk, {{Q("-1/100")}}, std::nullopt, Q("1/10"));
  CHECK(down.all_ok());
  CHECK(down.passed() == 2);
  const TheoremReport zero = check_lipschitz(dk, {{Q("0")}}, Q("1"), Q("1/10"));
  REQUIRE(zero.records.size() == 1);
  CHECK(zero.records[0].lhs == 0);
  CHECK(zero.records[0].ok);
  // Too large a step is outside the box and skipped.
  CHECK(check_lipschitz(dk, {{Q("-1/2")}}, Q("1"), Q("1/10")).skipped() == 1);
  // A constant that is too small is reported as a failure.
  CHECK_FALSE(check_lipschitz(dk, {{Q("-1/10")}}, Q("1/1000"), Q("1/10")).all_ok());
}

TEST_CASE("coefficient sweep on the two axes is non-increasing") {
  std::optional<Rational> previous;
  for (int i = 0; i <= 40; ++i) {
    const Rational a = Q("1/2") + make_rational(i, 100);
    const NvolCertificate c = minimize_nvol(LogPair::smooth(
        {{a, PlaneCurve::parse("x")}, {a, PlaneCurve::parse("y")}}));
    CHECK(c.certified);
    CHECK(c.value == 4 * (1 - a) * (1 - a));
    if (previous) CHECK(c.value <= *previous);
    previous = c.value;
  }
  const TheoremReport sweep =
      check_lipschitz_corpus(corpus_of({smooth({{"1/2", "x"}, {"1/2", "y"}})}), 20, std::nullopt);
  CHECK(sweep.all_ok());
  CHECK(sweep.failed() == 0);
}

TEST_CASE("truncation examples") {
  const TheoremReport r = check_truncation(smooth({{"1/2", "y^2 - x^3 - x^7"}}));
  REQUIRE(r.witnesses.size() == 1);
  CHECK(r.witnesses[0].second == "4");
  CHECK(r.records.size() == 6);
  CHECK(r.all_ok());
  const TheoremReport dk = check_truncation(dk_pair(3, Q("1/4")));
  CHECK(dk.all_ok());
  CHECK(dk.records.front().lhs == Q("25/96"));
  CHECK(check_truncation(smooth({{"1/3", "x^2*y"}})).all_ok());
}

TEST_CASE("lct-mult convergence") {
  const TheoremReport flat = check_lct_mult_convergence(MonomialValuation(Q("1"), Q("1")), LogPair::smooth(), 20);
  for (std::size_t i = 0; i + 1 < flat.records.size(); ++i) CHECK(flat.records[i].lhs == 4);
  CHECK(flat.all_ok());
  const TheoremReport axis =
      check_lct_mult_convergence(MonomialValuation(Q("1"), Q("1")), smooth({{"1/2", "x"}}), 30);
  for (std::size_t i = 0; i + 1 < axis.records.size(); ++i) CHECK(axis.records[i].ok);
}

TEST_CASE("order bounds") {
  const TheoremReport r = check_order_bounds(corpus_of({LogPair::smooth(), smooth({{"1/2", "x^2 - y^3"}})}));
  REQUIRE(r.records.size() == 3);
  CHECK(r.records[0].lhs == 2);
  CHECK(r.records[0].ok);
  CHECK(r.records[1].skipped);
  CHECK(r.records[2].lhs == 2);
  CHECK(r.records[2].rhs == 4);
  CHECK(r.all_ok());
}

TEST_CASE("delta-plt on the D_k family") {
  const TheoremReport r = check_delta_plt_existence(corpus_of({LogPair::smooth()}), Q("1/4"), 12);
  REQUIRE(r.records.size() == 11);
  CHECK(r.records[0].lhs == 1);
  for (int k = 3; k <= 12; ++k) {
    const CheckRecord& rec = r.records[k - 2];
    CHECK(rec.lhs == make_rational(1, k));
    CHECK(rec.ok);
  }
}

TEST_CASE("ACC enumeration") {
  const auto box2 = enumerate_acc({Q("1/2")}, 2, Q("1/10"));
  CHECK(box2 == read_golden("enumerate_acc_half_box2.txt"));
  const auto box3 = enumerate_acc({Q("1/2")}, 3, Q("1/10"), {4});
  CHECK(box3 == read_golden("enumerate_acc_half_box3.txt"));
  for (const auto& v : box2) CHECK(std::binary_search(box3.begin(), box3.end(), v));
  CHECK(enumerate_acc({}, 3, Q("1/10")) == std::vector<Rational>{Rational(4)});
  // Larger coefficient sets only add values.
  const auto wider = enumerate_acc({Q("1/2"), Q("1/3")}, 2, Q("1/10"));
  for (const auto& v : box2) CHECK(std::binary_search(wider.begin(), wider.end(), v));
  for (const auto& v : wider) CHECK(v > Q("1/10"));
}

TEST_CASE("reports do not depend on the number of jobs") {
  const InstanceCorpus corpus = generate_corpus({{}, 4, 60, 8, CorpusKind::Mixed, true});
  const auto a = to_json(check_surface_lct_bound(corpus, {1})).dump();
  const auto b = to_json(check_surface_lct_bound(corpus, {6})).dump();
  CHECK(a == b);
  const auto c = to_json(check_truncation_corpus(corpus, {1})).dump();
  const auto d = to_json(check_truncation_corpus(corpus, {5})).dump();
  CHECK(c == d);
}
