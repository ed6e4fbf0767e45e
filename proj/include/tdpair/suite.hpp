#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tdpair/leonard.hpp"
#include "tdpair/residual.hpp"
#include "tdpair/system.hpp"

namespace tdpair {

/// The fixed check vocabulary, in report order.
const std::vector<std::string>& check_ids();

struct CheckResult {
  std::string id;
  /// False when the check does not apply (section11 off Leonard systems,
  /// section12 off Krawtchouk type); such a check counts as passing.
  bool applicable = true;
  bool pass = true;
  std::vector<Residual> residuals;
  std::vector<RankEntry> ranks;
  /// Set when the check aborted with an exception.
  std::string error;
  double elapsed_ms = 0.0;
};

struct SuiteOptions {
  /// Empty means every check.
  std::set<std::string> only;
  /// Only used when d <= 2.
  std::optional<Scalar> beta;
  /// 0 reads TDPAIR_THREADS, falling back to the hardware concurrency.
  unsigned threads = 0;
};

struct SuiteResult {
  std::vector<CheckResult> checks;
  std::optional<RelationParameters> params;
  std::optional<LeonardData> leonard;
  /// Set when the shared decompositions could not be built.
  std::string error;
  double setup_ms = 0.0;
  bool pass = false;

  const CheckResult* find(std::string_view id) const;
};

/// Builds the relation parameters and the R/F/L and split decompositions
/// once, then runs the selected checks, concurrently when allowed. Results
/// come back in vocabulary order regardless of scheduling.
SuiteResult run_check_suite(const TridiagonalSystem& sys, const SuiteOptions& options = {});

/// Worker count after applying TDPAIR_THREADS.
unsigned effective_threads(unsigned requested);

}  // namespace tdpair
