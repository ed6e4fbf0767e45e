#include "tdpair/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "tdpair/bridge.hpp"
#include "tdpair/error.hpp"
#include "tdpair/krawtchouk.hpp"
#include "tdpair/rfl.hpp"
#include "tdpair/split.hpp"

namespace tdpair {

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids{"relations", "section5", "section7",  "descent",   "master",
                                            "diagrams",  "section9", "section10", "section11", "section12"};
  return ids;
}

const CheckResult* SuiteResult::find(std::string_view id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

unsigned effective_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TDPAIR_THREADS")) {
    const long value = std::strtol(env, nullptr, 10);
    if (value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Context {
  const TridiagonalSystem& sys;
  RelationParameters params;
  RFLDecomposition rfl;
  SplitDecomposition split;
  std::optional<LeonardData> leonard;
};

void run_one(const Context& ctx, CheckResult& out) {
  const auto& sys = ctx.sys;
  const std::string& id = out.id;
  if (id == "relations") {
    const auto [td1, td2] = check_tridiagonal_relations(sys, ctx.params);
    out.residuals.push_back(matrix_residual("TD1", {}, td1));
    out.residuals.push_back(matrix_residual("TD2", {}, td2));
  } else if (id == "section5") {
    out.residuals = check_section5(sys, ctx.params, ctx.rfl);
  } else if (id == "section7") {
    out.residuals = check_section7(sys, ctx.split);
    out.ranks = check_split_bijectivity(sys, ctx.split);
  } else if (id == "descent") {
    out.residuals = check_descent(sys, ctx.split);
  } else if (id == "master") {
    out.residuals = check_master_identity(sys, ctx.split);
  } else if (id == "diagrams") {
    out.residuals = check_diagrams(sys, ctx.split, ctx.rfl);
  } else if (id == "section9") {
    out.residuals = check_section9(sys, ctx.split, ctx.params);
  } else if (id == "section10") {
    out.ranks = check_section10(sys, ctx.rfl);
  } else if (id == "section11") {
    if (!ctx.leonard) {
      out.applicable = false;
      return;
    }
    out.residuals = check_section11(sys, ctx.split, *ctx.leonard, ctx.params);
    auto reps = check_representations(sys, ctx.rfl, ctx.split, *ctx.leonard);
    out.residuals.insert(out.residuals.end(), reps.begin(), reps.end());
  } else if (id == "section12") {
    if (!is_krawtchouk_type(sys)) {
      out.applicable = false;
      return;
    }
    out.residuals = check_section12(sys, ctx.rfl, ctx.split);
  }
}

}  // namespace

SuiteResult run_check_suite(const TridiagonalSystem& sys, const SuiteOptions& options) {
  for (const auto& id : options.only) {
    if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end()) {
      throw Error(Errc::invalid_argument, "unknown check id '" + id + "'");
    }
  }
  SuiteResult result;
  const auto setup_start = Clock::now();
  std::optional<Context> ctx;
  try {
    auto params = compute_relation_parameters(sys, options.beta);
    auto rfl = compute_rfl(sys);
    auto split = compute_split(sys);
    ctx.emplace(Context{sys, std::move(params), std::move(rfl), std::move(split), std::nullopt});
    if (std::all_of(sys.shape.begin(), sys.shape.end(), [](std::size_t r) { return r == 1; })) {
      ctx->leonard = derive_leonard_data(sys, ctx->split);
    }
  } catch (const Error& e) {
    result.error = e.what();
    result.setup_ms = ms_since(setup_start);
    return result;
  }
  result.setup_ms = ms_since(setup_start);
  result.params = ctx->params;
  result.leonard = ctx->leonard;

  for (const auto& id : check_ids()) {
    if (options.only.empty() || options.only.count(id)) {
      CheckResult check;
      check.id = id;
      result.checks.push_back(std::move(check));
    }
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < result.checks.size(); k = next++) {
      CheckResult& check = result.checks[k];
      const auto start = Clock::now();
      try {
        run_one(*ctx, check);
        check.pass = all_zero(check.residuals) && all_ok(check.ranks);
      } catch (const std::exception& e) {
        check.pass = false;
        check.error = e.what();
      }
      check.elapsed_ms = ms_since(start);
    }
  };
  const unsigned threads =
      std::min<unsigned>(effective_threads(options.threads), static_cast<unsigned>(result.checks.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  result.pass = std::all_of(result.checks.begin(), result.checks.end(), [](const CheckResult& c) { return c.pass; });
  return result;
}

}  // namespace tdpair
