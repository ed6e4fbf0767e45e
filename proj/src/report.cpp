#include "tdpair/report.hpp"

#include <limits>
#include <sstream>

#include "tdpair/error.hpp"

namespace tdpair {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::parse, what); }

Field parse_field(const json& doc) {
  if (!doc.contains("field")) return Field::rational();
  const json& f = doc.at("field");
  if (f.is_string()) return Field::parse(f.get<std::string>());
  if (!f.is_object() || !f.contains("kind") || !f.at("kind").is_string()) bad("field must be an object with a kind");
  const auto kind = f.at("kind").get<std::string>();
  if (kind == "rational") return Field::rational();
  if (kind != "prime") bad("unknown field kind '" + kind + "'");
  if (!f.contains("p") || !f.at("p").is_number_unsigned()) bad("prime field needs a positive integer p");
  try {
    return Field::prime(f.at("p").get<std::uint64_t>());
  } catch (const Error& e) {
    bad(e.what());
  }
}

Scalar parse_entry(const Field& field, const json& v) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) {
      const auto u = v.get<std::uint64_t>();
      if (u > static_cast<std::uint64_t>(std::numeric_limits<long>::max())) return Scalar::parse(field, std::to_string(u));
    }
    return Scalar(field, v.get<long>());
  }
  if (v.is_string()) return Scalar::parse(field, v.get<std::string>());
  bad("matrix entries must be integers or strings, got " + v.dump());
}

Matrix parse_matrix(const Field& field, const json& doc, const char* key) {
  if (!doc.contains(key)) bad(std::string("missing '") + key + "'");
  const json& rows = doc.at(key);
  if (!rows.is_array() || rows.empty()) bad(std::string("'") + key + "' must be a nonempty array of rows");
  const std::size_t n = rows.size();
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = rows.at(i);
    if (!row.is_array() || row.size() != n) bad(std::string("'") + key + "' must be square");
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = parse_entry(field, row.at(j));
  }
  return m;
}

std::optional<std::vector<Scalar>> parse_sequence(const Field& field, const json& doc, const char* key) {
  if (!doc.contains(key)) return std::nullopt;
  const json& seq = doc.at(key);
  if (!seq.is_array()) bad(std::string("'") + key + "' must be an array");
  std::vector<Scalar> out;
  for (const auto& v : seq) out.push_back(parse_entry(field, v));
  return out;
}

json index_json(const std::vector<long>& index) { return json(index); }

json cell(const std::optional<Scalar>& s) { return s ? json(s->to_string()) : json(nullptr); }

}  // namespace

PairInput parse_pair_input(const json& doc) {
  if (!doc.is_object()) bad("input must be a JSON object");
  if (doc.contains("schema") && doc.at("schema") != kSchemaVersion) {
    bad("unsupported schema " + doc.at("schema").dump());
  }
  PairInput in;
  try {
    in.field = parse_field(doc);
    in.A = parse_matrix(in.field, doc, "A");
    in.Astar = parse_matrix(in.field, doc, "Astar");
    in.theta = parse_sequence(in.field, doc, "theta");
    in.thetastar = parse_sequence(in.field, doc, "thetastar");
  } catch (const Error& e) {
    if (e.code() == Errc::parse) throw;
    bad(e.what());
  }
  if (in.A.rows() != in.Astar.rows()) bad("A and Astar differ in size");
  return in;
}

PairInput parse_pair_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  return parse_pair_input(doc);
}

json field_to_json(const Field& field) {
  if (field.is_rational()) return {{"kind", "rational"}};
  return {{"kind", "prime"}, {"p", field.modulus()}};
}

json scalars_to_json(const std::vector<Scalar>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.to_string());
  return out;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(scalars_to_json(m.row(i)));
  return out;
}

json system_to_json(const TridiagonalSystem& sys) {
  return {{"schema", kSchemaVersion},
          {"field", field_to_json(sys.field())},
          {"d", sys.d},
          {"A", matrix_to_json(sys.A)},
          {"Astar", matrix_to_json(sys.Astar)},
          {"theta", scalars_to_json(sys.theta)},
          {"thetastar", scalars_to_json(sys.thetastar)},
          {"shape", sys.shape}};
}

json parameters_to_json(const RelationParameters& p) {
  return {{"beta", p.beta.to_string()},
          {"gamma", p.gamma.to_string()},
          {"gammastar", p.gammastar.to_string()},
          {"rho", p.rho.to_string()},
          {"rhostar", p.rhostar.to_string()},
          {"theta_m1", p.theta_m1.to_string()},
          {"theta_dp1", p.theta_dp1.to_string()},
          {"thetastar_m1", p.thetastar_m1.to_string()},
          {"thetastar_dp1", p.thetastar_dp1.to_string()}};
}

json leonard_to_json(const LeonardData& data) {
  return {{"d", data.d},
          {"theta", scalars_to_json(data.theta)},
          {"thetastar", scalars_to_json(data.thetastar)},
          {"phi", scalars_to_json(data.phi)},
          {"a", scalars_to_json(data.a)},
          {"x", scalars_to_json(data.x)},
          {"b", scalars_to_json(data.b)},
          {"c", scalars_to_json(data.c)}};
}

json residual_to_json(const Residual& r) {
  json out{{"identity", r.identity}, {"index", index_json(r.index)}, {"is_zero", r.is_zero}, {"norm0", r.norm0}};
  if (r.counterexample) {
    out["counterexample"] = json::array({r.counterexample->first, r.counterexample->second});
  }
  return out;
}

json rank_to_json(const RankEntry& r) {
  return {{"table", r.table}, {"i", r.i}, {"j", r.j}, {"rank", r.rank}, {"expected", r.expected}, {"ok", r.ok()}};
}

json check_to_json(const CheckResult& check, bool timing) {
  json out{{"applicable", check.applicable}, {"pass", check.pass}};
  json residuals = json::array();
  for (const auto& r : check.residuals) residuals.push_back(residual_to_json(r));
  json ranks = json::array();
  for (const auto& r : check.ranks) ranks.push_back(rank_to_json(r));
  out["residuals"] = std::move(residuals);
  out["ranks"] = std::move(ranks);
  if (!check.error.empty()) out["error"] = check.error;
  if (timing) out["elapsed_ms"] = check.elapsed_ms;
  return out;
}

json suite_to_json(const SuiteResult& suite, bool timing) {
  json out{{"pass", suite.pass}};
  json checks = json::object();
  for (const auto& c : suite.checks) checks[c.id] = check_to_json(c, timing);
  out["checks"] = std::move(checks);
  if (suite.params) out["parameters"] = parameters_to_json(*suite.params);
  if (suite.leonard) out["leonard"] = leonard_to_json(*suite.leonard);
  if (!suite.error.empty()) out["error"] = suite.error;
  if (timing) out["setup_ms"] = suite.setup_ms;
  return out;
}

json verification_report(const std::string& input, const PairVerdict& verdict,
                         const std::vector<SuiteResult>& suites, bool timing) {
  json out{{"schema", kSchemaVersion}, {"input", input}};
  out["verdict"] = {{"failure", std::string(to_string(verdict.failure))},
                    {"detail", verdict.detail},
                    {"algebra_dimension", verdict.algebra_dim},
                    {"systems_found", verdict.systems.size()}};
  json systems = json::array();
  bool pass = verdict.ok() && !verdict.systems.empty();
  for (std::size_t k = 0; k < verdict.systems.size(); ++k) {
    json entry = system_to_json(verdict.systems[k]);
    entry.erase("schema");
    if (k < suites.size()) {
      entry["suite"] = suite_to_json(suites[k], timing);
      pass = pass && suites[k].pass;
    }
    systems.push_back(std::move(entry));
  }
  out["systems"] = std::move(systems);
  out["pass"] = pass;
  return out;
}

json leonard_table(const LeonardData& L) {
  json rows = json::array();
  for (std::size_t i = 0; i <= L.d; ++i) {
    auto shifted = [&](const std::vector<Scalar>& v) {
      return i >= 1 ? std::optional<Scalar>(v[i - 1]) : std::nullopt;
    };
    rows.push_back(json::array({i, L.theta[i].to_string(), L.thetastar[i].to_string(), cell(shifted(L.phi)), L.a[i].to_string(),
                    cell(shifted(L.x)), cell(i < L.d ? std::optional<Scalar>(L.b[i]) : std::nullopt),
                    cell(shifted(L.c))}));
  }
  return {{"columns", json::array({"i", "theta", "thetastar", "phi", "a", "x", "b", "c"})}, {"rows", rows}};
}

json table_document(const TridiagonalSystem& sys, const SuiteResult& suite) {
  json tables = json::object();

  json shape_rows = json::array();
  for (std::size_t i = 0; i <= sys.d; ++i) shape_rows.push_back(json::array({i, sys.shape[i]}));
  tables["shape"] = {{"columns", json::array({"i", "rho"})}, {"rows", shape_rows}};

  json rank_rows = json::array();
  for (const char* id : {"section7", "section10"}) {
    if (const auto* check = suite.find(id)) {
      for (const auto& r : check->ranks) rank_rows.push_back(json::array({r.table, r.i, r.j, r.rank, r.expected}));
    }
  }
  tables["ranks"] = {{"columns", json::array({"table", "i", "j", "rank", "expected"})}, {"rows", rank_rows}};

  if (suite.params) {
    json rows = json::array();
    const json params = parameters_to_json(*suite.params);
    for (const auto& [name, value] : params.items()) rows.push_back(json::array({name, value}));
    tables["parameters"] = {{"columns", json::array({"name", "value"})}, {"rows", rows}};
  }

  if (suite.leonard) tables["leonard"] = leonard_table(*suite.leonard);

  return {{"schema", kSchemaVersion},
          {"field", field_to_json(sys.field())},
          {"d", sys.d},
          {"pass", suite.pass},
          {"tables", tables}};
}

std::string table_csv(const json& doc) {
  auto text = [](const json& v) -> std::string {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, table] : doc.at("tables").items()) {
    if (!first) out << '\n';
    first = false;
    out << "# " << name << '\n';
    const auto& columns = table.at("columns");
    for (std::size_t k = 0; k < columns.size(); ++k) out << (k ? "," : "") << text(columns[k]);
    out << '\n';
    for (const auto& row : table.at("rows")) {
      for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << text(row[k]);
      out << '\n';
    }
  }
  return out.str();
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace tdpair
