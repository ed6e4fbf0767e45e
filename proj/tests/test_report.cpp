#include <sstream>

#include "doctest.h"
#include "support.hpp"
#include "tdpair/error.hpp"
#include "tdpair/report.hpp"
#include "tdpair/suite.hpp"

using namespace tdpair;
using namespace tdpair::testing;

namespace {

std::vector<std::vector<std::string>> csv_block(const std::string& csv, const std::string& name) {
  std::istringstream in(csv);
  std::vector<std::vector<std::string>> rows;
  bool inside = false;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("# ", 0) == 0) {
      inside = line == "# " + name;
      continue;
    }
    if (!inside || line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::string cell_text(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

TEST_CASE("check vocabulary") {
  CHECK(check_ids() == std::vector<std::string>{"relations", "section5", "section7", "descent", "master",
                                                "diagrams", "section9", "section10", "section11", "section12"});
}

TEST_CASE("run_check_suite") {
  SUBCASE("Krawtchouk system: everything applies and passes") {
    const auto r = run_check_suite(krawtchouk(3, q(1, 3)));
    CHECK(r.pass);
    CHECK(r.error.empty());
    REQUIRE(r.checks.size() == check_ids().size());
    for (const auto& c : r.checks) {
      CHECK(c.applicable);
      CHECK(c.pass);
    }
    REQUIRE(r.leonard);
    CHECK(r.leonard->b == krawtchouk_closed_forms({3, q(1, 3)}).b);
  }
  SUBCASE("non-Krawtchouk Leonard system skips the last check") {
    const auto r = run_check_suite(geometric_leonard().first);
    CHECK(r.pass);
    CHECK(r.find("section11")->applicable);
    CHECK_FALSE(r.find("section12")->applicable);
  }
  SUBCASE("shape (1,2,2,1) skips the Leonard checks") {
    const auto out = kronecker_sum_candidate(krawtchouk(1, q(1, 2)), krawtchouk(2, q(1, 3)));
    REQUIRE(out.verdict.ok());
    const auto r = run_check_suite(out.verdict.systems.front());
    CHECK(r.pass);
    CHECK_FALSE(r.leonard);
    CHECK_FALSE(r.find("section11")->applicable);
    bool saw_two = false;
    for (const auto& e : r.find("section10")->ranks) saw_two = saw_two || e.rank == 2;
    CHECK(saw_two);
  }
  SUBCASE("subset and unknown ids") {
    SuiteOptions options;
    options.only = {"master", "relations"};
    const auto r = run_check_suite(krawtchouk(2, q(1, 2)), options);
    REQUIRE(r.checks.size() == 2);
    CHECK(r.checks[0].id == "relations");
    CHECK(r.checks[1].id == "master");
    options.only = {"nope"};
    CHECK_THROWS_AS(run_check_suite(krawtchouk(2, q(1, 2)), options), Error);
  }
  SUBCASE("setup failure is reported, not thrown") {
    SuiteOptions options;
    options.beta = q(7);
    const auto r = run_check_suite(krawtchouk(3, q(1, 2)), options);
    CHECK_FALSE(r.pass);
    CHECK_FALSE(r.error.empty());
  }
  SUBCASE("thread count does not change results") {
    const auto sys = krawtchouk(3, q(2, 5));
    SuiteOptions one, many;
    one.threads = 1;
    many.threads = 8;
    CHECK(dump(suite_to_json(run_check_suite(sys, one), false)) ==
          dump(suite_to_json(run_check_suite(sys, many), false)));
  }
}

TEST_CASE("parse_pair_input") {
  SUBCASE("integers and fraction strings") {
    const auto in = parse_pair_text(R"({"schema":1,"field":{"kind":"rational"},"A":[[0,"1/2"],[2,0]],"Astar":[[1,0],[0,-1]]})");
    CHECK(in.A(0, 1) == q(1, 2));
    CHECK(in.field.is_rational());
    CHECK_FALSE(in.theta);
  }
  SUBCASE("prime field forms") {
    CHECK(parse_pair_text(R"({"field":{"kind":"prime","p":101},"A":[[1]],"Astar":[[2]]})").field == Field::prime(101));
    CHECK(parse_pair_text(R"({"field":"prime:7","A":[[1]],"Astar":[[2]]})").field == Field::prime(7));
    CHECK(parse_pair_text(R"({"A":[[1]],"Astar":[[2]]})").field.is_rational());
  }
  SUBCASE("malformed input") {
    auto code = [](const std::string& text) {
      try {
        parse_pair_text(text);
      } catch (const Error& e) {
        return e.code();
      }
      return Errc::internal_inconsistency;
    };
    CHECK(code(R"({"schema":1,"A":[[0,1],[1,0]],"Astar":[[1,0],[0,)") == Errc::parse);
    CHECK(code(R"({"schema":2,"A":[[1]],"Astar":[[1]]})") == Errc::parse);
    CHECK(code(R"({"A":[[1,2]],"Astar":[[1]]})") == Errc::parse);
    CHECK(code(R"({"A":[[1]],"Astar":[[1,0],[0,1]]})") == Errc::parse);
    CHECK(code(R"({"A":[[1.5]],"Astar":[[1]]})") == Errc::parse);
    CHECK(code(R"({"A":[["1/0"]],"Astar":[[1]]})") == Errc::parse);
    CHECK(code(R"({"field":{"kind":"prime","p":12},"A":[[1]],"Astar":[[1]]})") == Errc::parse);
    CHECK(code(R"({"field":{"kind":"complex"},"A":[[1]],"Astar":[[1]]})") == Errc::parse);
    CHECK(code(R"({"Astar":[[1]]})") == Errc::parse);
    CHECK(code("[]") == Errc::parse);
  }
}

TEST_CASE("system files round-trip") {
  const auto sys = construct_krawtchouk({3, Scalar(Field::prime(101), 2L)}).first;
  const auto in = parse_pair_input(json::parse(dump(system_to_json(sys))));
  CHECK(in.A == sys.A);
  CHECK(in.Astar == sys.Astar);
  REQUIRE(in.theta);
  const auto v = verify_pair(in.A, in.Astar);
  const auto again = select_system(v.systems, *in.theta, *in.thetastar);
  REQUIRE(again);
  CHECK(again->E == sys.E);
}

TEST_CASE("report output") {
  const auto sys = krawtchouk(3, q(1, 2));
  const auto suite = run_check_suite(sys);
  const json doc = table_document(sys, suite);

  SUBCASE("phi column") {
    std::vector<std::string> phi;
    for (const auto& row : doc["tables"]["leonard"]["rows"]) phi.push_back(cell_text(row[3]));
    CHECK(phi == std::vector<std::string>{"", "-6", "-8", "-6"});
  }
  SUBCASE("all-ones rank tables") {
    for (const auto& row : doc["tables"]["ranks"]["rows"]) {
      CHECK(row[3] == 1);
      CHECK(row[4] == 1);
    }
  }
  SUBCASE("CSV agrees with JSON cell by cell") {
    const std::string csv = table_csv(doc);
    for (const auto& [name, table] : doc["tables"].items()) {
      const auto rows = csv_block(csv, name);
      REQUIRE(rows.size() == table["rows"].size() + 1);
      for (std::size_t k = 0; k < table["columns"].size(); ++k) CHECK(rows[0][k] == cell_text(table["columns"][k]));
      for (std::size_t r = 0; r < table["rows"].size(); ++r) {
        REQUIRE(rows[r + 1].size() == table["rows"][r].size());
        for (std::size_t k = 0; k < rows[r + 1].size(); ++k) CHECK(rows[r + 1][k] == cell_text(table["rows"][r][k]));
      }
    }
  }
  SUBCASE("byte-stable with sorted keys") {
    const std::string a = dump(doc);
    CHECK(a == dump(table_document(sys, run_check_suite(sys))));
    CHECK(a.find("\"d\"") < a.find("\"field\""));
    CHECK(a.find("\"field\"") < a.find("\"schema\""));
  }
}

TEST_CASE("verification report") {
  const auto v = verify_pair(ints({{0, 1}, {1, 0}}), ints({{1, 0}, {0, -1}}));
  std::vector<SuiteResult> suites;
  for (const auto& sys : v.systems) suites.push_back(run_check_suite(sys));
  const json report = verification_report("swap.json", v, suites, false);
  CHECK(report["pass"] == true);
  CHECK(report["systems"].size() == 4);
  CHECK(report["verdict"]["failure"] == "ok");
  CHECK(dump(report).find("elapsed_ms") == std::string::npos);
  CHECK(dump(verification_report("swap.json", v, suites, true)).find("elapsed_ms") != std::string::npos);

  const auto bad = verify_pair(ints({{1, 0}, {0, 2}}), ints({{1, 0}, {0, 2}}));
  const json rejected = verification_report("diag.json", bad, {}, false);
  CHECK(rejected["pass"] == false);
  CHECK(rejected["verdict"]["failure"] == "reducible");
}

TEST_CASE("failing residuals carry a counterexample") {
  const Residual r = matrix_residual("probe", {1, 2}, ints({{0, 0}, {0, 3}}));
  const json j = residual_to_json(r);
  CHECK(j["is_zero"] == false);
  CHECK(j["norm0"] == 1);
  CHECK(j["counterexample"] == json::array({1, 1}));
  CHECK(j["index"] == json::array({1, 2}));
}
