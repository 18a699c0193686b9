#pragma once

#include <initializer_list>
#include <utility>

#include "kltvol/log_pair.hpp"

namespace kltvol::test {

inline Rational Q(const char* s) { return parse_rational(s); }

/// Smooth pair from {"coeff", "poly"} entries.
inline LogPair smooth(std::initializer_list<std::pair<const char*, const char*>> terms) {
  std::vector<BoundaryTerm> b;
  for (const auto& [c, f] : terms) b.push_back({parse_rational(c), PlaneCurve::parse(f)});
  return LogPair::smooth(std::move(b));
}

}  // namespace kltvol::test
