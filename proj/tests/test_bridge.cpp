#include "doctest.h"
#include "support.hpp"
#include "tdpair/bridge.hpp"
#include "tdpair/linalg.hpp"
#include "tdpair/rfl.hpp"
#include "tdpair/split.hpp"

using namespace tdpair;
using namespace tdpair::testing;

TEST_CASE("denominators") {
  const auto th = seq({3, 1, -1, -3});
  CHECK(descent_denominator(th, 2, 2) == q(1));
  CHECK(ascent_denominator(th, 1, 1) == q(1));
  // (th_3 - th_0)(th_3 - th_1)(th_3 - th_2) = (-6)(-4)(-2).
  CHECK(descent_denominator(th, 0, 3) == q(-48));
  // (th_0 - th_1)(th_0 - th_2) = 2 * 4.
  CHECK(ascent_denominator(th, 0, 2) == q(8));
}

TEST_CASE("descent on the d=1 Krawtchouk pair") {
  const auto sys = krawtchouk(1, q(1, 2));
  const auto split = compute_split(sys);
  // thetastar_1 - thetastar_0 = -2.
  CHECK(split.F[0] * sys.Estar[1] == q(-1, 2) * split.calL * split.F[1] * sys.Estar[1]);
  CHECK(all_zero(check_descent(sys, split)));
}

TEST_CASE("descent full sweep") {
  const auto sys = krawtchouk(3, q(1, 3));
  CHECK(all_zero(check_descent(sys, compute_split(sys))));
}

TEST_CASE("master identity") {
  const auto sys = krawtchouk(2, q(1, 2));
  const auto split = compute_split(sys);
  const auto rs = check_master_identity(sys, split);
  CHECK(all_zero(rs));
  for (std::size_t i = 0; i <= 2; ++i) {
    for (std::size_t j = 0; j <= 2; ++j) {
      CHECK(split.F[i] * sys.Estar[i] * sys.A * sys.Estar[j] == master_identity_rhs(sys, split, i, j));
    }
  }
  // Specializations at |i - j| <= 1.
  for (std::size_t j = 0; j <= 2; ++j) {
    CHECK(corollary_flat(sys, split, j) == master_operator(sys, split, j, j));
    if (j < 2) CHECK(corollary_raise(sys, split, j) == master_operator(sys, split, j + 1, j));
    if (j > 0) CHECK(corollary_lower(sys, split, j) == master_operator(sys, split, j - 1, j));
  }
  // F_{j+1}E*_{j+1}AE*_j = calR F_jE*_j.
  for (std::size_t j = 0; j < 2; ++j) {
    CHECK(split.F[j + 1] * sys.Estar[j + 1] * sys.A * sys.Estar[j] == split.calR * split.F[j] * sys.Estar[j]);
  }
}

TEST_CASE("diagrams") {
  for (const auto& sys : {krawtchouk(1, q(1, 2)), krawtchouk(3, q(2, 5)), geometric_leonard().first}) {
    CHECK(all_zero(check_diagrams(sys, compute_split(sys), compute_rfl(sys))));
  }
  // Raising diagram: Psi R = calR Psi everywhere on V.
  const auto sys = krawtchouk(3, q(2, 5));
  const auto split = compute_split(sys);
  CHECK(split.Psi * compute_rfl(sys).R == split.calR * split.Psi);
}

TEST_CASE("check_section9") {
  SUBCASE("vacuous below d = 2") {
    const auto sys = krawtchouk(1, q(1, 3));
    CHECK(check_section9(sys, compute_split(sys), compute_relation_parameters(sys, std::nullopt)).empty());
  }
  SUBCASE("Krawtchouk and geometric systems") {
    for (const auto& sys : {krawtchouk(2, q(1, 2)), krawtchouk(4, q(1, 3)), geometric_leonard().first}) {
      const auto rs = check_section9(sys, compute_split(sys), compute_relation_parameters(sys, std::nullopt));
      CHECK_FALSE(rs.empty());
      CHECK(all_zero(rs));
    }
  }
}

TEST_CASE("cubic coefficient") {
  const auto k = krawtchouk(4, q(1, 3));
  for (std::size_t j = 2; j <= 4; ++j) CHECK(cubic_coefficient(k, j).is_zero());
  // theta = thetastar = 2^i: (2 - 1)^2 - (2 - 4)^2 = -3 at j = 2.
  const auto g = geometric_leonard().first;
  CHECK(cubic_coefficient(g, 2) == q(-3));
  // (4 - 2)^2 - (4 - 8)^2 = -12 at j = 3.
  CHECK(cubic_coefficient(g, 3) == q(-12));
}
