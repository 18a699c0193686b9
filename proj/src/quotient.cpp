#include "kltvol/quotient.hpp"

#include <numeric>

#include "kltvol/error.hpp"

namespace kltvol {

NvolCertificate quotient_nvol(const LogPair& pair) {
  if (pair.smooth_ambient()) return minimize_nvol(pair);
  const auto& q = std::get<CyclicQuotient>(pair.ambient());
  NvolCertificate cert = minimize_nvol(pair.on_cover());
  cert.value /= q.r;
  cert.degree = q.r;
  if (pair.boundary().empty() && cert.value != make_rational(4, q.r)) {
    throw Error(ErrorKind::InternalInconsistency, "boundary-free quotient " + q.to_string() + " has volume " +
                                                      to_string(cert.value));
  }
  return cert;
}

NvolCertificate quotient_nvol(const CyclicQuotient& q, const std::vector<BoundaryTerm>& cover_boundary) {
  return quotient_nvol(LogPair(q, cover_boundary));
}

std::int64_t group_order_bound(const Rational& epsilon) {
  if (epsilon <= 0 || epsilon > 4) throw Error(ErrorKind::InvalidArgument, "epsilon must lie in (0,4]");
  return to_int64(ceil(Rational(4) / epsilon)) - 1;
}

std::vector<std::pair<CyclicQuotient, Rational>> enumerate_quotients_with_nvol_above(const Rational& epsilon) {
  std::vector<std::pair<CyclicQuotient, Rational>> out;
  const std::int64_t bound = group_order_bound(epsilon);
  for (std::int64_t r = 1; r <= bound; ++r) {
    for (std::int64_t a = (r == 1 ? 0 : 1); a < std::max<std::int64_t>(r, 1); ++a) {
      if (r > 1 && std::gcd(a, r) != 1) continue;
      const CyclicQuotient q(r, a);
      const NvolCertificate cert = quotient_nvol(q, {});
      if (cert.value > epsilon) out.emplace_back(q, cert.value);
    }
  }
  return out;
}

}  // namespace kltvol
