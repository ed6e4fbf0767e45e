// tdpair: construct, verify and report on tridiagonal systems.
//
// Exit codes: 0 success, 1 the input is not a tridiagonal pair or some check
// failed, 2 malformed input or inadmissible parameters.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "tdpair/error.hpp"
#include "tdpair/krawtchouk.hpp"
#include "tdpair/leonard.hpp"
#include "tdpair/report.hpp"
#include "tdpair/suite.hpp"

using namespace tdpair;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<Scalar> parse_scalars(const Field& field, const std::string& text) {
  std::vector<Scalar> out;
  for (const auto& item : split_list(text)) out.push_back(Scalar::parse(field, item));
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw UsageError("cannot write " + out_path);
  out << text;
}

json construct_document(const TridiagonalSystem& sys, const LeonardData& data) {
  json doc = system_to_json(sys);
  doc["leonard"] = leonard_to_json(data);
  return doc;
}

void write_construct(const TridiagonalSystem& sys, const LeonardData& data, const std::string& out,
                     const std::string& table) {
  emit(dump(construct_document(sys, data)), out);
  if (!table.empty()) emit(table_csv(json{{"tables", {{"leonard", leonard_table(data)}}}}), table);
}

struct Loaded {
  PairInput input;
  PairVerdict verdict;
};

Loaded load(const std::string& path) {
  Loaded out{parse_pair_text(read_input(path)), {}};
  out.verdict = verify_pair(out.input.A, out.input.Astar);
  return out;
}

SuiteOptions suite_options(const Field& field, const std::string& beta, const std::string& checks) {
  SuiteOptions options;
  if (!beta.empty()) options.beta = Scalar::parse(field, beta);
  for (const auto& id : split_list(checks)) {
    if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end()) {
      throw UsageError("unknown check '" + id + "'");
    }
    options.only.insert(id);
  }
  return options;
}

// A --beta that contradicts the value forced at d >= 3 is a usage error,
// not a failed check.
void validate_beta(const TridiagonalSystem& sys, const SuiteOptions& options) {
  if (!options.beta) return;
  try {
    compute_relation_parameters(sys, options.beta);
  } catch (const Error& e) {
    if (e.code() == Errc::invalid_argument) throw UsageError(e.what());
  }
}

int cmd_verify(const std::string& path, const std::string& out, const std::string& beta,
               const std::string& checks, bool timing) {
  auto loaded = load(path);
  const auto options = suite_options(loaded.input.field, beta, checks);
  std::vector<SuiteResult> suites;
  for (const auto& sys : loaded.verdict.systems) {
    validate_beta(sys, options);
    suites.push_back(run_check_suite(sys, options));
  }
  const json report = verification_report(path, loaded.verdict, suites, timing);
  emit(dump(report), out);
  if (!loaded.verdict.ok()) {
    std::cerr << "not a tridiagonal pair: " << to_string(loaded.verdict.failure) << " (" << loaded.verdict.detail
              << ")\n";
  }
  return report.at("pass").get<bool>() ? kOk : kFailed;
}

int cmd_report(const std::string& path, const std::string& format, const std::string& out,
               const std::string& beta) {
  auto loaded = load(path);
  if (!loaded.verdict.ok()) {
    std::cerr << "not a tridiagonal pair: " << to_string(loaded.verdict.failure) << " (" << loaded.verdict.detail
              << ")\n";
    return kFailed;
  }
  // Files written by construct carry their orderings; otherwise take the
  // first system found.
  const TridiagonalSystem* sys = &loaded.verdict.systems.front();
  std::optional<TridiagonalSystem> chosen;
  if (loaded.input.theta && loaded.input.thetastar) {
    chosen = select_system(loaded.verdict.systems, *loaded.input.theta, *loaded.input.thetastar);
    if (!chosen) throw UsageError("theta/thetastar do not match a standard ordering");
    sys = &*chosen;
  }
  const auto options = suite_options(loaded.input.field, beta, "");
  validate_beta(*sys, options);
  const auto suite = run_check_suite(*sys, options);
  const json doc = table_document(*sys, suite);
  emit(format == "csv" ? table_csv(doc) : dump(doc), out);
  return suite.pass ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of tridiagonal pairs and systems"};
  app.require_subcommand(1);

  auto* construct = app.add_subcommand("construct", "Build a Leonard or Krawtchouk system");
  construct->require_subcommand(1);
  std::string field_text = "rational", out, table;

  auto* kraw = construct->add_subcommand("krawtchouk", "theta_i = thetastar_i = d - 2i");
  std::size_t kd = 0;
  std::string kp = "1/2";
  kraw->add_option("--d", kd, "Diameter")->required();
  kraw->add_option("--p", kp, "Parameter, not 0 or 1")->capture_default_str();
  kraw->add_option("--field", field_text, "rational or prime:<p>")->capture_default_str();
  kraw->add_option("--out", out, "System file (default stdout)");
  kraw->add_option("--table", table, "Also write the scalar table as CSV");

  auto* leon = construct->add_subcommand("leonard", "From eigenvalues and the first split sequence");
  std::string ltheta, lthetastar, lphi;
  leon->add_option("--theta", ltheta, "Comma-separated theta_0..theta_d")->required();
  leon->add_option("--thetastar", lthetastar, "Comma-separated thetastar_0..thetastar_d")->required();
  leon->add_option("--phi", lphi, "Comma-separated phi_1..phi_d")->required();
  leon->add_option("--field", field_text, "rational or prime:<p>")->capture_default_str();
  leon->add_option("--out", out, "System file (default stdout)");
  leon->add_option("--table", table, "Also write the scalar table as CSV");

  auto* verify = app.add_subcommand("verify", "Verify a matrix pair and run every check");
  std::string path, beta, checks;
  bool timing = false;
  verify->add_option("path", path, "Input JSON, - for stdin")->required();
  verify->add_option("--out", out, "Report file (default stdout)");
  verify->add_option("--beta", beta, "beta for d <= 2 (default 2)");
  verify->add_option("--checks", checks, "Comma-separated subset of check ids");
  verify->add_flag("--timing", timing, "Include per-check timings");

  auto* report = app.add_subcommand("report", "Rank and scalar tables for one system");
  std::string format = "json";
  report->add_option("path", path, "Input JSON, - for stdin")->required();
  report->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  report->add_option("--out", out, "Output file (default stdout)");
  report->add_option("--beta", beta, "beta for d <= 2 (default 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (kraw->parsed()) {
      const Field field = Field::parse(field_text);
      auto [sys, data] = construct_krawtchouk({kd, Scalar::parse(field, kp)});
      write_construct(sys, data, out, table);
      return kOk;
    }
    if (leon->parsed()) {
      const Field field = Field::parse(field_text);
      auto [sys, data] =
          construct_leonard(parse_scalars(field, ltheta), parse_scalars(field, lthetastar), parse_scalars(field, lphi));
      write_construct(sys, data, out, table);
      return kOk;
    }
    if (verify->parsed()) return cmd_verify(path, out, beta, checks, timing);
    if (report->parsed()) return cmd_report(path, format, out, beta);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    // Inconsistencies inside the library are bugs, not bad input.
    return e.code() == Errc::internal_inconsistency ? kFailed : kBadInput;
  }
  return kBadInput;
}
