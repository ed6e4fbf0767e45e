#include "doctest.h"
#include "support.hpp"
#include "tdpair/error.hpp"
#include "tdpair/leonard.hpp"
#include "tdpair/linalg.hpp"

using namespace tdpair;
using namespace tdpair::testing;

namespace {

void check_cross_formulas(const LeonardData& L) {
  Scalar sum_a = Scalar::zero(L.theta[0].field()), sum_theta = sum_a;
  for (std::size_t i = 0; i <= L.d; ++i) {
    const long li = static_cast<long>(i);
    CHECK(L.c_at(li) + L.a[i] + L.b_at(li) == L.theta[0]);
    if (i >= 1) CHECK(L.x_at(li) == L.c_at(li) * L.b_at(li - 1));
    if (i < L.d) CHECK(L.b[i] == L.phi[i] * L.taustar[i] / L.taustar[i + 1]);
    sum_a += L.a[i];
    sum_theta += L.theta[i];
  }
  CHECK(sum_a == sum_theta);
}

}  // namespace

TEST_CASE("construct_leonard from Krawtchouk data") {
  const auto [sys, L] = construct_leonard(seq({2, 0, -2}), seq({2, 0, -2}), seq({-4, -4}));
  CHECK(sys.shape == std::vector<std::size_t>{1, 1, 1});
  CHECK(L.a == seq({0, 0, 0}));
  CHECK(L.x == seq({2, 2}));
  CHECK(L.b == seq({2, 1}));
  CHECK(L.c == seq({1, 2}));
  // b_0 = phi_1 taustar_0 / taustar_1 = (-4)(1)/(-2).
  CHECK(L.taustar[0] == q(1));
  CHECK(L.taustar[1] == q(-2));
  check_cross_formulas(L);
}

TEST_CASE("boundary accessors") {
  const auto L = construct_leonard(seq({2, 0, -2}), seq({2, 0, -2}), seq({-4, -4})).second;
  CHECK(L.phi_at(0).is_zero());
  CHECK(L.phi_at(3).is_zero());
  CHECK(L.phi_at(1) == q(-4));
  CHECK(L.x_at(0).is_zero());
  CHECK(L.b_at(2).is_zero());
  CHECK(L.c_at(0).is_zero());
}

TEST_CASE("inadmissible parameter arrays") {
  CHECK_THROWS_AS(construct_leonard(seq({2, 0, -2}), seq({2, 0, -2}), seq({0, -4})), Error);
  // Nonzero phi that fails the pair axioms.
  try {
    construct_leonard(seq({2, 0, -2}), seq({2, 0, -2}), seq({-4, 5}));
    FAIL("expected rejection");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_leonard);
  }
  CHECK_THROWS_AS(construct_leonard(seq({2, 2, -2}), seq({2, 0, -2}), seq({-4, -4})), Error);
  CHECK_THROWS_AS(construct_leonard(seq({2, 0, -2}), seq({2, 0, -2}), seq({-4})), Error);
}

TEST_CASE("derived data on other systems") {
  check_cross_formulas(geometric_leonard().second);
  const Field f = Field::prime(101);
  check_cross_formulas(construct_krawtchouk({4, Scalar(f, 50L)}).second);
}

TEST_CASE("derive_leonard_data needs shape all ones") {
  const auto k1 = krawtchouk(1, q(1, 2));
  const auto k2 = krawtchouk(2, q(1, 3));
  const auto v = verify_pair(kronecker(k1.A, Matrix::identity(Field::rational(), 3)) +
                                 kronecker(Matrix::identity(Field::rational(), 2), k2.A),
                             kronecker(k1.Astar, Matrix::identity(Field::rational(), 3)) +
                                 kronecker(Matrix::identity(Field::rational(), 2), k2.Astar));
  REQUIRE(v.ok());
  const auto& sys = v.systems.front();
  try {
    derive_leonard_data(sys, compute_split(sys));
    FAIL("expected not_leonard");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_leonard);
  }
}

TEST_CASE("representations for d=1 p=1/2") {
  const auto sys = krawtchouk(1, q(1, 2));
  const auto reps = change_of_basis_reps(sys, compute_rfl(sys), compute_split(sys));
  CHECK(reps.standard.A == ints({{0, 1}, {1, 0}}));
  CHECK(reps.standard.Astar == ints({{1, 0}, {0, -1}}));
  CHECK(reps.split.A == ints({{1, 0}, {1, -1}}));
  CHECK(reps.raising.Astar == ints({{1, 0}, {0, -1}}));
  for (const auto* r : {&reps.raising, &reps.split, &reps.standard}) {
    const Matrix inv = inverse(r->basis);
    CHECK(inv * sys.A * r->basis == r->A);
    CHECK(inv * sys.Astar * r->basis == r->Astar);
  }
}

TEST_CASE("representation shapes") {
  const auto [sys, L] = geometric_leonard();
  const auto reps = change_of_basis_reps(sys, compute_rfl(sys), compute_split(sys));
  const std::size_t n = sys.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // Raising basis: a on the diagonal, 1 below, x above.
      const Scalar raising = i == j ? L.a[i] : i == j + 1 ? q(1) : j == i + 1 ? L.x[i] : q(0);
      CHECK(reps.raising.A(i, j) == raising);
      const Scalar split = i == j ? sys.theta[i] : i == j + 1 ? q(1) : q(0);
      CHECK(reps.split.A(i, j) == split);
      const Scalar split_star = i == j ? sys.thetastar[i] : j == i + 1 ? L.phi[i] : q(0);
      CHECK(reps.split.Astar(i, j) == split_star);
      const Scalar standard = i == j ? L.a[i] : i == j + 1 ? L.c[j] : j == i + 1 ? L.b[i] : q(0);
      CHECK(reps.standard.A(i, j) == standard);
    }
  }
  CHECK(all_zero(check_representations(sys, compute_rfl(sys), compute_split(sys), L)));
}

TEST_CASE("check_section11") {
  SUBCASE("d=2 p=1/2 hand values") {
    const auto [sys, L] = construct_leonard(seq({2, 0, -2}), seq({2, 0, -2}), seq({-4, -4}));
    // a_1 = theta_1 + phi_1/(ths_1 - ths_0) + phi_2/(ths_1 - ths_2) = 0 + (-4)/(-2) + (-4)/2.
    CHECK(L.a[1] == q(0) + q(-4) / q(-2) + q(-4) / q(2));
    // phi_0 - 3 phi_1 + 3 phi_2 - phi_3 with beta = 2 at j = 2.
    CHECK(q(0) - q(3) * L.phi_at(1) + q(3) * L.phi_at(2) - L.phi_at(3) == q(0));
    const auto rs = check_section11(sys, compute_split(sys), L, compute_relation_parameters(sys, std::nullopt));
    CHECK(all_zero(rs));
  }
  SUBCASE("d=1") {
    const auto [sys, L] = construct_leonard(seq({1, -1}), seq({1, -1}), seq({-2}));
    // (ths_0 - ths_1)^2 x_1/phi_1 = -phi_1 - (th_0 - th_1)(ths_0 - ths_1).
    CHECK(q(4) * L.x[0] / L.phi[0] == q(2) - q(4));
    CHECK(all_zero(
        check_section11(sys, compute_split(sys), L, compute_relation_parameters(sys, std::nullopt))));
  }
  SUBCASE("geometric system") {
    const auto [sys, L] = geometric_leonard();
    CHECK(all_zero(
        check_section11(sys, compute_split(sys), L, compute_relation_parameters(sys, std::nullopt))));
  }
  SUBCASE("corrupted data is caught") {
    auto [sys, L] = construct_leonard(seq({3, 1, -1, -3}), seq({3, 1, -1, -3}), seq({-6, -8, -6}));
    L.a[1] += q(1);
    CHECK_FALSE(all_zero(
        check_section11(sys, compute_split(sys), L, compute_relation_parameters(sys, std::nullopt))));
  }
}
