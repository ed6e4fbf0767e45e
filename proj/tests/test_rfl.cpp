#include "doctest.h"
#include "support.hpp"
#include "tdpair/linalg.hpp"
#include "tdpair/rfl.hpp"

using namespace tdpair;
using namespace tdpair::testing;

namespace {

std::size_t count_identity(const std::vector<Residual>& rs, const std::string& name) {
  std::size_t n = 0;
  for (const auto& r : rs) n += r.identity == name ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("quantum decomposition of the d=1 Krawtchouk pair") {
  const auto sys = krawtchouk(1, q(1, 2));
  REQUIRE(sys.A == ints({{0, 1}, {1, 0}}));
  REQUIRE(sys.Astar == ints({{1, 0}, {0, -1}}));
  const auto rfl = compute_rfl(sys);
  CHECK(rfl.R == ints({{0, 0}, {1, 0}}));
  CHECK(rfl.L == ints({{0, 1}, {0, 0}}));
  CHECK(rfl.F.is_zero());
}

TEST_CASE("flat part vanishes at p = 1/2") {
  // a_i = (1 - 2p)(d - 2i) = 0.
  for (std::size_t d = 1; d <= 5; ++d) CHECK(compute_rfl(krawtchouk(d, q(1, 2))).F.is_zero());
  CHECK_FALSE(compute_rfl(krawtchouk(2, q(1, 3))).F.is_zero());
}

TEST_CASE("quantum decomposition invariants") {
  for (const auto& sys : {krawtchouk(3, q(1, 3)), geometric_leonard().first}) {
    const auto rfl = compute_rfl(sys);
    CHECK(rfl.R + rfl.F + rfl.L == sys.A);
    CHECK(rfl.R.pow(static_cast<unsigned>(sys.d + 1)).is_zero());
    CHECK(rfl.L.pow(static_cast<unsigned>(sys.d + 1)).is_zero());
    for (std::size_t i = 0; i <= sys.d; ++i) {
      CHECK(commutator(rfl.F, sys.Estar[i]).is_zero());
      CHECK((rfl.R.pow(static_cast<unsigned>(sys.d - i + 1)) * sys.Estar[i]).is_zero());
      CHECK((rfl.L.pow(static_cast<unsigned>(i + 1)) * sys.Estar[i]).is_zero());
      if (i < sys.d) CHECK(sys.Estar[i + 1] * sys.A * sys.Estar[i] == rfl.R * sys.Estar[i]);
    }
  }
}

TEST_CASE("coefficients for theta* = d - 2i") {
  const auto sys = krawtchouk(3, q(1, 3));
  const auto c = section5_coefficients(sys, compute_relation_parameters(sys, std::nullopt));
  // g+_2 = (thetastar_2 - thetastar_3)/(thetastar_2 - thetastar_0) = 2/(-4).
  REQUIRE(c.gplus[2]);
  CHECK(*c.gplus[2] == q(-1, 2));
  REQUIRE(c.gminus[3]);
  CHECK(*c.gminus[3] == q(-1, 2));
}

TEST_CASE("check_section5") {
  SUBCASE("Krawtchouk d=3 p=1/3") {
    const auto sys = krawtchouk(3, q(1, 3));
    const auto rs = check_section5(sys, compute_relation_parameters(sys, std::nullopt), compute_rfl(sys));
    CHECK(all_zero(rs));
    CHECK(count_identity(rs, "LLF") > 0);
    // With g+- = -1/2 and gamma = 0 the first relation is [L,[L,F]] = 0.
    const auto rfl = compute_rfl(sys);
    CHECK(commutator(rfl.L, commutator(rfl.L, rfl.F)).is_zero());
  }
  SUBCASE("d=1 has no part (i) instances") {
    const auto sys = krawtchouk(1, q(1, 3));
    const auto rs = check_section5(sys, compute_relation_parameters(sys, std::nullopt), compute_rfl(sys));
    CHECK(all_zero(rs));
    CHECK(count_identity(rs, "LLF") == 0);
    CHECK(count_identity(rs, "RRF") == 0);
  }
  SUBCASE("beta other than 2") {
    const auto sys = geometric_leonard().first;
    CHECK(all_zero(check_section5(sys, compute_relation_parameters(sys, std::nullopt), compute_rfl(sys))));
  }
  SUBCASE("a wrong gamma is caught") {
    const auto sys = krawtchouk(3, q(1, 3));
    auto params = compute_relation_parameters(sys, std::nullopt);
    params.gamma = q(1);
    CHECK_FALSE(all_zero(check_section5(sys, params, compute_rfl(sys))));
  }
}

TEST_CASE("check_section10 rank tables") {
  SUBCASE("Leonard system: every entry 1") {
    const auto sys = krawtchouk(4, q(3, 4));
    const auto table = check_section10(sys, compute_rfl(sys));
    CHECK(all_ok(table));
    for (const auto& e : table) CHECK(e.rank == 1);
  }
  SUBCASE("d=2 p=1/2, i=0, j=2") {
    const auto sys = krawtchouk(2, q(1, 2));
    const auto rfl = compute_rfl(sys);
    CHECK(rank(rfl.R.pow(2) * sys.Estar[0]) == 1);
    for (const auto& e : check_section10(sys, rfl)) {
      if (e.table == "R" && e.i == 0 && e.j == 2) CHECK(e.rank == 1);
    }
  }
  SUBCASE("closed form") {
    const std::vector<std::size_t> shape{1, 2, 2, 1};
    CHECK(closed_form_rank(shape, 0, 3) == 1);
    CHECK(closed_form_rank(shape, 1, 2) == 2);
    CHECK(closed_form_rank(shape, 2, 3) == 1);
  }
}
