#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "kltvol/corpus.hpp"
#include "kltvol/log_pair.hpp"
#include "kltvol/valuation.hpp"

namespace kltvol {

/// One exact comparison. `margin` is oriented so that larger is better;
/// ok is decided by the check, not by the sign of the margin alone.
struct CheckRecord {
  std::string digest;
  std::string instance;
  std::string relation;  ///< e.g. ">=", "<", "=="
  Rational lhs;
  Rational rhs;
  Rational margin;
  bool ok = false;
  bool skipped = false;
  std::string note;
};

struct TheoremReport {
  std::string theorem;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<CheckRecord> records;
  std::vector<std::pair<std::string, std::string>> witnesses;

  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t skipped() const;
  std::optional<Rational> worst_margin() const;
  bool all_ok() const { return failed() == 0; }

  void add(CheckRecord r) { records.push_back(std::move(r)); }
  void append(const TheoremReport& other);
  void witness(std::string key, std::string value) { witnesses.emplace_back(std::move(key), std::move(value)); }
};

/// 64-bit FNV-1a of the canonical instance string, as 16 hex digits.
std::string digest(const LogPair& pair);

/// fn(0..n-1) on up to `jobs` threads; results keep index order.
template <class F>
auto parallel_map(std::size_t n, unsigned jobs, F&& fn) -> std::vector<decltype(fn(std::size_t{0}))> {
  using R = decltype(fn(std::size_t{0}));
  std::vector<std::optional<R>> slots(n);
  const unsigned workers = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
  auto run = [&](unsigned w) {
    for (std::size_t i = w; i < n; i += workers) slots[i].emplace(fn(i));
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::vector<R> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

struct HarnessOptions {
  unsigned jobs = 1;
};

/// 8 * lct(A2, Delta; Delta) >= nvol for every certifiable instance.
TheoremReport check_surface_lct_bound(const InstanceCorpus& corpus, const HarnessOptions& opt = {});

/// Perturbed coefficients a + t. Checks |nvol(a) - nvol(a+t)| <= C*Sum|t_i|
/// and monotonicity for sign-definite t. When C is empty the empirical
/// constant max |Delta nvol| / Sum|t| is used and reported.
TheoremReport check_lipschitz(const LogPair& pair, const std::vector<std::vector<Rational>>& perturbations,
                              const std::optional<Rational>& C, const Rational& iota);

/// Single-coordinate sweeps: for each coefficient a_i and j = 1..steps,
/// t = -j*a_i/(steps+1) e_i and t = +j*(1-a_i)/(steps+1) e_i.
std::vector<std::vector<Rational>> sweep_perturbations(const LogPair& pair, int steps);

/// check_lipschitz with sweep_perturbations on every instance, plus the
/// ordered non-increasing test along each sweep. One empirical C for the
/// whole corpus unless C is given.
TheoremReport check_lipschitz_corpus(const InstanceCorpus& corpus, int steps, const std::optional<Rational>& C,
                                     const HarnessOptions& opt = {});

/// k0 = 1 + max_i floor(v*(f_i)/v*(m)); truncations at k0..k0+extra keep
/// the certified value and minimizer.
TheoremReport check_truncation(const LogPair& pair, int extra = 5);
TheoremReport check_truncation_corpus(const InstanceCorpus& corpus, const HarnessOptions& opt = {});

/// Sorted distinct certified volumes > epsilon over all boundaries
/// Sum a_i div(x^p y^q), a_i in coeff_set, exponents in [0, box], at most
/// three pairwise coprime components (the empty boundary included).
std::vector<Rational> enumerate_acc(const std::vector<Rational>& coeff_set, int box, const Rational& epsilon,
                                    const HarnessOptions& opt = {});

/// s_m = lct(a_m(v))^2 * e(a_m(v)) for m = 1..m_max, compared with nvol(v):
/// s_m >= nvol(v) for every m and |s_{m_max} - nvol(v)| <= tolerance.
TheoremReport check_lct_mult_convergence(const MonomialValuation& v, const LogPair& pair, int m_max,
                                         const Rational& tolerance = Rational(1, 10));

/// lct(m) <= 2 for monomial boundaries; ord(f) < 2/c for each klt c*div(f).
TheoremReport check_order_bounds(const InstanceCorpus& corpus, const HarnessOptions& opt = {});

/// Plt grades of the certified Kollar components with nvol > epsilon, and
/// the D_k family with parameter epsilon (k = 3..k_max): nvol > epsilon
/// while the grade is exactly 1/k.
TheoremReport check_delta_plt_existence(const InstanceCorpus& corpus, const Rational& epsilon, int k_max = 12,
                                        const HarnessOptions& opt = {});

}  // namespace kltvol
