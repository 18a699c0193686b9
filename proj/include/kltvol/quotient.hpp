#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kltvol/kollar.hpp"
#include "kltvol/log_pair.hpp"

namespace kltvol {

/// Local volume of a pair on a cyclic quotient, read off the cover:
/// minimize_nvol on the smooth cover divided by r. On the smooth ambient this
/// is minimize_nvol itself.
NvolCertificate quotient_nvol(const LogPair& pair);
NvolCertificate quotient_nvol(const CyclicQuotient& q, const std::vector<BoundaryTerm>& cover_boundary);

/// Largest r with r < 4/epsilon.
std::int64_t group_order_bound(const Rational& epsilon);

/// All types (1/r)(1,a) with r <= group_order_bound(epsilon) whose
/// boundary-free volume 4/r exceeds epsilon, ordered by r then a.
std::vector<std::pair<CyclicQuotient, Rational>> enumerate_quotients_with_nvol_above(const Rational& epsilon);

}  // namespace kltvol
