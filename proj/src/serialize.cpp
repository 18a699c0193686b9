#include "kltvol/serialize.hpp"

#include <sstream>

#include "kltvol/error.hpp"

namespace kltvol {

namespace {

Rational rational_field(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
  throw Error(ErrorKind::Parse, "expected a rational as \"num/den\", got " + j.dump());
}

Json weights_json(const IntWeights& w) { return Json::array({w.m1, w.m2}); }

const char* kind_name(PointKind k) {
  switch (k) {
    case PointKind::QuotientX: return "quotient_x";
    case PointKind::QuotientY: return "quotient_y";
    case PointKind::Transverse: return "transverse";
  }
  return "transverse";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

LogPair pair_from_json(const Json& j) {
  try {
    Ambient ambient = SmoothPlane{};
    if (j.contains("ambient")) {
      const Json& a = j.at("ambient");
      if (a.is_string()) {
        const auto s = a.get<std::string>();
        if (s == "A2") {
          ambient = SmoothPlane{};
        } else {
          ambient = CyclicQuotient::parse(s);
        }
      } else {
        const Json& q = a.at("quotient");
        ambient = CyclicQuotient(q.at("r").get<std::int64_t>(), q.at("a").get<std::int64_t>());
      }
    }
    std::vector<BoundaryTerm> boundary;
    if (j.contains("boundary")) {
      for (const auto& b : j.at("boundary")) {
        boundary.push_back({rational_field(b.at("coeff")), PlaneCurve::parse(b.at("poly").get<std::string>())});
      }
    }
    return LogPair(std::move(ambient), std::move(boundary));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("malformed pair: ") + e.what());
  }
}

Json to_json(const LogPair& pair) {
  Json j;
  if (const auto* q = std::get_if<CyclicQuotient>(&pair.ambient())) {
    j["ambient"] = {{"quotient", {{"r", q->r}, {"a", q->a}}}};
  } else {
    j["ambient"] = "A2";
  }
  j["boundary"] = Json::array();
  for (const auto& t : pair.boundary()) {
    j["boundary"].push_back({{"coeff", to_string(t.coeff)}, {"poly", t.curve.to_string()}});
  }
  return j;
}

Json to_json(const KollarComponent& kc) {
  Json j;
  j["weights"] = weights_json(kc.weights);
  j["log_discrepancy"] = to_string(kc.ambient_A);
  j["different"] = Json::array();
  for (const auto& c : kc.different) {
    j["different"].push_back({{"kind", kind_name(c.kind)}, {"count", c.count}, {"d", to_string(c.d)}});
  }
  j["different_degree"] = to_string(kc.different_degree());
  j["nvol"] = to_string(nvol_of_kollar(kc));
  j["plt_grade"] = to_string(delta_plt_grade(kc));
  return j;
}

Json to_json(const NvolCertificate& cert) {
  Json j;
  j["value"] = to_string(cert.value);
  j["minimizer"] = weights_json(cert.minimizer.canonical());
  j["certified"] = cert.certified;
  j["kss"] = cert.kss;
  j["degree"] = cert.degree;
  j["kollar"] = cert.kollar ? to_json(*cert.kollar) : Json(nullptr);
  return j;
}

Json to_json(const LctCertificate& cert) {
  Json j;
  j["lct"] = to_string(cert.lct);
  j["certified"] = cert.certified;
  switch (cert.source) {
    case LctSource::Exceptional:
      j["source"] = "exceptional";
      j["ray"] = weights_json(cert.ray);
      break;
    case LctSource::AxisX:
      j["source"] = "axis_x";
      j["ray"] = weights_json(cert.ray);
      break;
    case LctSource::AxisY:
      j["source"] = "axis_y";
      j["ray"] = weights_json(cert.ray);
      break;
    case LctSource::Component:
      j["source"] = "component";
      j["component"] = cert.component;
      break;
  }
  j["lc_witness"] = cert.lc_witness ? weights_json(*cert.lc_witness) : Json(nullptr);
  return j;
}

Json to_json(const TheoremReport& report) {
  Json j;
  j["theorem"] = report.theorem;
  j["parameters"] = Json::object();
  for (const auto& [k, v] : report.parameters) j["parameters"][k] = v;
  const auto worst = report.worst_margin();
  j["summary"] = {{"records", report.records.size()},
                  {"passed", report.passed()},
                  {"failed", report.failed()},
                  {"skipped", report.skipped()},
                  {"worst_margin", worst ? Json(to_string(*worst)) : Json(nullptr)},
                  {"ok", report.all_ok()}};
  j["witnesses"] = Json::object();
  for (const auto& [k, v] : report.witnesses) j["witnesses"][k] = v;
  j["records"] = Json::array();
  for (const auto& r : report.records) {
    j["records"].push_back({{"digest", r.digest},
                            {"instance", r.instance},
                            {"relation", r.relation},
                            {"lhs", to_string(r.lhs)},
                            {"rhs", to_string(r.rhs)},
                            {"margin", to_string(r.margin)},
                            {"ok", r.ok},
                            {"skipped", r.skipped},
                            {"note", r.note}});
  }
  return j;
}

Json to_json(const std::vector<Rational>& values) {
  Json j = Json::array();
  for (const auto& v : values) j.push_back(to_string(v));
  return j;
}

std::string report_csv(const TheoremReport& report) {
  std::ostringstream os;
  os << "digest,instance,relation,lhs,rhs,margin,ok,skipped,note\n";
  for (const auto& r : report.records) {
    os << r.digest << ',' << csv_field(r.instance) << ',' << csv_field(r.relation) << ',' << to_string(r.lhs) << ','
       << to_string(r.rhs) << ',' << to_string(r.margin) << ',' << (r.ok ? "true" : "false") << ','
       << (r.skipped ? "true" : "false") << ',' << csv_field(r.note) << '\n';
  }
  return os.str();
}

std::string values_csv(const std::vector<Rational>& values) {
  std::ostringstream os;
  os << "value\n";
  for (const auto& v : values) os << to_string(v) << '\n';
  return os.str();
}

}  // namespace kltvol
