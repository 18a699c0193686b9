#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kltvol/log_pair.hpp"

namespace kltvol {

enum class CorpusKind {
  Monomial,           ///< one monomial curve, or div(x^p) + div(y^q)
  Binomial,           ///< y^q - x^p, optionally with the coordinate axes
  Tailed,             ///< binomial plus a higher-degree tail term
  QuotientInvariant,  ///< invariant boundaries on random (1/r)(1,a)
  Mixed,              ///< Monomial and Binomial interleaved
};

std::string corpus_kind_name(CorpusKind kind);
CorpusKind parse_corpus_kind(const std::string& name);

struct CorpusParams {
  std::vector<Rational> coefficients;  ///< empty means default_coefficients()
  int box = 4;                         ///< exponents drawn from [1, box]
  std::size_t count = 200;
  std::uint64_t seed = 1;
  CorpusKind kind = CorpusKind::Mixed;
  /// Keep only pairs with a certified volume and (when Delta != 0) a
  /// certified lct of the boundary.
  bool certifiable_only = true;
};

struct InstanceCorpus {
  CorpusParams params;
  std::vector<LogPair> instances;
};

std::vector<Rational> default_coefficients();

/// Deterministic in the parameters. May return fewer than `count` instances
/// when the filter rejects too many draws.
InstanceCorpus generate_corpus(const CorpusParams& params);

InstanceCorpus corpus_of(std::vector<LogPair> instances);

/// (1-eps)(1/(k-1) + 1/k) * div(x^(k-1) - y^k).
LogPair dk_pair(int k, const Rational& eps);

/// True when minimize_nvol certifies the volume and, for a nonempty
/// boundary, certified_lct_of_boundary certifies the threshold.
bool certifiable(const LogPair& pair);

}  // namespace kltvol
