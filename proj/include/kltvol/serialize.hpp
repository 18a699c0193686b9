#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "kltvol/harness.hpp"
#include "kltvol/kollar.hpp"
#include "kltvol/log_pair.hpp"
#include "kltvol/quotient.hpp"

namespace kltvol {

using Json = nlohmann::ordered_json;

/// {"ambient": "A2" | {"quotient": {"r": r, "a": a}},
///  "boundary": [{"coeff": "n/d", "poly": "..."}]}
LogPair pair_from_json(const Json& j);
Json to_json(const LogPair& pair);

Json to_json(const KollarComponent& kc);
Json to_json(const NvolCertificate& cert);
Json to_json(const LctCertificate& cert);
Json to_json(const TheoremReport& report);
Json to_json(const std::vector<Rational>& values);

std::string report_csv(const TheoremReport& report);
std::string values_csv(const std::vector<Rational>& values);

}  // namespace kltvol
