#include "ridgebound/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "ridgebound/error.hpp"

namespace ridgebound {

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

double number_from(const Json& j) { return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>(); }

}  // namespace

Json to_json(const Codebook& cb) {
  Json words = Json::array();
  for (const auto& w : cb.words) words.push_back(w.to_string());
  return Json{{"M", cb.length},
              {"L", cb.weight},
              {"min_distance", cb.min_distance},
              {"construction", cb.construction},
              {"size", cb.size()},
              {"words", std::move(words)}};
}

Codebook codebook_from_json(const Json& j) {
  Codebook cb;
  cb.length = j.at("M").get<std::size_t>();
  cb.weight = j.at("L").get<std::size_t>();
  cb.min_distance = j.at("min_distance").get<std::size_t>();
  cb.construction = j.value("construction", std::string{});
  for (const auto& w : j.at("words")) {
    auto word = Codeword::from_string(w.get<std::string>());
    require(word.length() == cb.length, "codebook: word length differs from M");
    cb.words.push_back(std::move(word));
  }
  return cb;
}

Json directions_to_json(const std::vector<RidgeDirection>& dirs, int d, int v0) {
  Json list = Json::array();
  for (const auto& dir : dirs) {
    Json coords = Json::array();
    for (const auto& c : dir.coordinates) coords.push_back(c.to_string());
    list.push_back(std::move(coords));
  }
  const std::string kind = dirs.empty() ? "lattice" : to_string(dirs.front().kind);
  return Json{{"d", d}, {"v0", v0}, {"kind", kind}, {"count", dirs.size()}, {"directions", std::move(list)}};
}

std::vector<RidgeDirection> directions_from_json(const Json& j) {
  const auto kind = direction_kind_from_string(j.at("kind").get<std::string>());
  const auto d = j.at("d").get<std::size_t>();
  std::vector<RidgeDirection> out;
  for (const auto& row : j.at("directions")) {
    std::vector<Rational> coords;
    for (const auto& c : row) coords.push_back(Rational::parse(c.get<std::string>()));
    require(coords.size() == d, "directions: coordinate count differs from d");
    out.push_back(RidgeDirection::from_coordinates(std::move(coords), kind));
  }
  return out;
}

Json to_json(const PackingSet& ps) {
  Json cert{{"min_separation", number_or_null(ps.certificate.min_separation)},
            {"min_norm", number_or_null(ps.certificate.min_norm)},
            {"max_norm", number_or_null(ps.certificate.max_norm)},
            {"common_norm", ps.certificate.common_norm ? Json(*ps.certificate.common_norm) : Json(nullptr)}};
  Json meta = Json::object();
  for (const auto& [k, v] : ps.metadata) meta[k] = number_or_null(v);
  return Json{{"family", to_string(ps.family)},
              {"ell", ps.ell},
              {"d", ps.d},
              {"v0", ps.v0},
              {"v1", ps.v1},
              {"epsilon", ps.epsilon},
              {"requested_epsilon", ps.requested_epsilon},
              {"L", ps.L},
              {"size", ps.size()},
              {"log_cardinality", ps.log_cardinality},
              {"design", to_string(ps.design())},
              {"activation", to_string(ps.activation().kind)},
              {"certificate", std::move(cert)},
              {"metadata", std::move(meta)},
              {"warnings", ps.warnings},
              {"directions", directions_to_json(ps.directions, ps.d, ps.v0)},
              {"codebook", to_json(ps.codebook)}};
}

PackingSet packing_from_json(const Json& j) {
  PackingSet ps;
  ps.family = family_from_string(j.at("family").get<std::string>());
  ps.ell = j.at("ell").get<int>();
  ps.d = j.at("d").get<int>();
  ps.v0 = j.at("v0").get<int>();
  ps.v1 = j.at("v1").get<double>();
  ps.epsilon = j.at("epsilon").get<double>();
  ps.requested_epsilon = j.at("requested_epsilon").get<double>();
  ps.L = j.at("L").get<std::size_t>();
  ps.log_cardinality = j.at("log_cardinality").get<double>();
  const auto& cert = j.at("certificate");
  ps.certificate.min_separation = number_from(cert.at("min_separation"));
  ps.certificate.min_norm = number_from(cert.at("min_norm"));
  ps.certificate.max_norm = number_from(cert.at("max_norm"));
  if (!cert.at("common_norm").is_null()) ps.certificate.common_norm = cert.at("common_norm").get<double>();
  for (const auto& [k, v] : j.at("metadata").items()) ps.metadata[k] = number_from(v);
  ps.warnings = j.value("warnings", std::vector<std::string>{});
  ps.directions = directions_from_json(j.at("directions"));
  ps.codebook = codebook_from_json(j.at("codebook"));
  return ps;
}

Json to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"pass", report.pass()}, {"checks", std::move(checks)}};
}

Json to_json(const PackingReport& report) {
  Json j = to_json(static_cast<const VerificationReport&>(report));
  j["min_separation"] = number_or_null(report.min_separation);
  j["min_norm"] = number_or_null(report.min_norm);
  j["max_norm"] = number_or_null(report.max_norm);
  return j;
}

Json to_json(const CodebookReport& report) {
  Json j = to_json(static_cast<const VerificationReport&>(report));
  j["actual_min_distance"] =
      report.actual_min_distance == CodebookReport::kInfiniteDistance ? Json(nullptr) : Json(report.actual_min_distance);
  j["all_distances_even"] = report.all_distances_even;
  return j;
}

Json to_json(const ConditionOutcome& c) {
  return Json{{"holds", c.holds}, {"lhs", number_or_null(c.lhs)}, {"rhs", number_or_null(c.rhs)}, {"formula", c.formula}};
}

Json to_json(const RateConstants& c) {
  Json j = Json::object();
  for (const auto& [k, v] : c.values()) j[k] = v;
  return j;
}

Json to_json(const RateResult& r) {
  Json conds = Json::object();
  for (const auto& [k, v] : r.conditions) conds[k] = to_json(v);
  Json comp = Json::object();
  for (const auto& [k, v] : r.comparison) comp[k] = number_or_null(v);
  return Json{{"family", to_string(r.family)},
              {"regime", to_string(r.regime)},
              {"eps_n_sq", r.eps_n_sq},
              {"eps_n_sq_matched", r.eps_n_sq_matched},
              {"formula", r.formula},
              {"constants", to_json(r.constants)},
              {"conditions", std::move(conds)},
              {"comparison", std::move(comp)}};
}

Json to_json(const ExperimentReport& r) {
  Json packing{{"id", r.packing_id},
               {"family", to_string(r.family)},
               {"d", r.d},
               {"v0", r.v0},
               {"v1", r.v1},
               {"ell", r.ell},
               {"L", r.L},
               {"epsilon", r.epsilon},
               {"cardinality", r.cardinality},
               {"log_cardinality", r.log_cardinality}};
  return Json{{"seed", r.seed},
              {"trials", r.trials},
              {"n", r.n},
              {"sigma", r.sigma},
              {"packing", std::move(packing)},
              {"mean_norm_sq", r.mean_norm_sq},
              {"mutual_info_bound", r.mutual_info_bound},
              {"implied_alpha", r.implied_alpha},
              {"errors", r.errors},
              {"empirical_error_prob", r.empirical_error_prob},
              {"stderr", r.stderr_error},
              {"fano_raw", r.fano_raw},
              {"fano_prediction", r.fano_prediction},
              {"pinsker_prediction", r.pinsker_prediction ? Json(*r.pinsker_prediction) : Json(nullptr)},
              {"risk_lower_bound", r.risk_lower_bound},
              {"empirical_risk", r.empirical_risk},
              {"stderr_risk", r.stderr_risk},
              {"vacuous", r.vacuous},
              {"pass", r.pass},
              {"risk_pass", r.risk_pass}};
}

Json to_json(const IdentityGridReport& r) {
  Json pts = Json::array();
  for (const auto& p : r.points) pts.push_back(Json{{"z", p.z}, {"residual", p.residual}});
  return Json{{"identity", to_string(r.identity)}, {"v", r.v}, {"max_residual", r.max_residual}, {"points", std::move(pts)}};
}

Json to_json(const std::map<std::string, VariationConstant>& constants) {
  Json j = Json::object();
  for (const auto& [name, c] : constants) {
    Json q = Json::object();
    for (const auto& [conv, v] : c.quadrature_value) q[conv] = v;
    j[name] = Json{{"paper_value", c.paper_value}, {"quadrature_value", std::move(q)}};
  }
  return j;
}

Json to_json(const ClassMapping& m) {
  return Json{{"source", Json{{"activation", to_string(m.source.activation)}, {"v0", m.source.v0}, {"v1", m.source.v1}}},
              {"target", to_string(m.target)},
              {"target_v0", m.target_v0},
              {"target_v1", m.target_v1}};
}

std::string gram_to_csv(const GramMatrix& g) {
  std::ostringstream os;
  os << "row";
  for (Eigen::Index j = 0; j < g.entries.cols(); ++j) os << ",c" << j;
  os << '\n';
  for (Eigen::Index i = 0; i < g.entries.rows(); ++i) {
    os << i;
    for (Eigen::Index j = 0; j < g.entries.cols(); ++j) os << ',' << format_double(g.entries(i, j));
    os << '\n';
  }
  return os.str();
}

std::string rate_table_to_csv(const std::vector<RateTableRow>& rows) {
  std::ostringstream os;
  const auto cols = rate_table_columns();
  os << "d,v0,v1,n";
  for (const auto& c : cols) os << ',' << c;
  os << '\n';
  for (const auto& r : rows) {
    os << format_double(r.d) << ',' << format_double(r.v0) << ',' << format_double(r.v1) << ',' << format_double(r.n);
    for (const auto& c : cols) {
      const auto it = r.values.find(c);
      os << ',' << format_double(it == r.values.end() ? std::numeric_limits<double>::quiet_NaN() : it->second);
    }
    os << '\n';
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw PreconditionError("cannot write " + path);
  out << contents;
  if (!out) throw PreconditionError("write failed: " + path);
}

}  // namespace ridgebound
