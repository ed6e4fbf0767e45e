#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tdpair/leonard.hpp"
#include "tdpair/suite.hpp"
#include "tdpair/system.hpp"

namespace tdpair {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// A matrix pair as read from an input file. theta/thetastar are present when
/// the file was written by `construct` and pin down the ordering.
struct PairInput {
  Field field;
  Matrix A, Astar;
  std::optional<std::vector<Scalar>> theta, thetastar;
};

/// Accepts {"schema":1, "field":{"kind":"rational"}|{"kind":"prime","p":P},
/// "A":[[...]], "Astar":[[...]]}. The field may also be the string form
/// "rational" / "prime:P", and defaults to rational. Entries are integers or
/// "n" / "n/d" strings. Throws Error(parse) on anything malformed.
PairInput parse_pair_input(const json& doc);
PairInput parse_pair_text(const std::string& text);

json field_to_json(const Field& field);
json scalars_to_json(const std::vector<Scalar>& values);
json matrix_to_json(const Matrix& m);

/// The loadable system file: schema, field, d, A, Astar, theta, thetastar,
/// shape.
json system_to_json(const TridiagonalSystem& sys);
json parameters_to_json(const RelationParameters& params);
json leonard_to_json(const LeonardData& data);
json residual_to_json(const Residual& r);
json rank_to_json(const RankEntry& r);
json check_to_json(const CheckResult& check, bool timing);
json suite_to_json(const SuiteResult& suite, bool timing);

/// Report for one verified input: the verdict, then one entry per system
/// with its check results.
json verification_report(const std::string& input, const PairVerdict& verdict,
                         const std::vector<SuiteResult>& suites, bool timing);

/// One row per index: i, theta, thetastar, phi, a, x, b, c; null where the
/// sequence is undefined.
json leonard_table(const LeonardData& data);

/// Flat tables used by `report`: every rank entry, the relation parameters
/// and, for Leonard systems, one row per index with theta, thetastar, phi, a,
/// x, b, c (empty where the sequence is undefined).
json table_document(const TridiagonalSystem& sys, const SuiteResult& suite);
/// The same document as CSV blocks, one per table, cell for cell.
std::string table_csv(const json& tables);

/// Sorted keys, two-space indent, trailing newline.
std::string dump(const json& doc);

}  // namespace tdpair
