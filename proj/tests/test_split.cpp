#include "doctest.h"
#include "support.hpp"
#include "tdpair/linalg.hpp"
#include "tdpair/split.hpp"

using namespace tdpair;
using namespace tdpair::testing;

TEST_CASE("split decomposition of the d=1 Krawtchouk pair") {
  const auto sys = krawtchouk(1, q(1, 2));
  const auto split = compute_split(sys);
  // U_0 = E*_0V is the first coordinate axis; U_1 = E_1V is spanned by (1, -1).
  CHECK(split.U[0] == Subspace::span(ints({{1}, {0}})));
  CHECK(split.U[1] == Subspace::span(ints({{1}, {-1}})));
  CHECK(split.F[0] + split.F[1] == Matrix::identity(Field::rational(), 2));
  // calL = A* - sum thetastar_i F_i.
  CHECK(split.calL == ints({{0, -2}, {0, 0}}));
  for (std::size_t i = 0; i <= 1; ++i) {
    CHECK(image(split.Psi * sys.Estar[i]) == image(split.F[i]));
  }
}

TEST_CASE("split basis of a Leonard system") {
  // In the split basis F_i is the i-th coordinate projector, so calR is the
  // subdiagonal of ones and calL carries phi above the diagonal.
  const auto theta = seq({2, 0, -2});
  const auto phi = seq({-4, -4});
  const auto [A, As] = split_basis_pair(theta, theta, phi);
  const auto sys = make_system(A, theta, As, theta);
  const auto split = compute_split(sys);
  CHECK(split.calR == ints({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}));
  CHECK(split.calL == ints({{0, -4, 0}, {0, 0, -4}, {0, 0, 0}}));
  for (std::size_t i = 0; i <= 2; ++i) {
    Matrix e(Field::rational(), 3, 3);
    e.at(i, i) = q(1);
    CHECK(split.F[i] == e);
  }
}

TEST_CASE("split invariants") {
  for (const auto& sys : {krawtchouk(2, q(1, 3)), krawtchouk(4, q(2, 7)), geometric_leonard().first}) {
    const auto split = compute_split(sys);
    const Matrix I = Matrix::identity(sys.field(), sys.dim());
    Matrix sum(sys.field(), sys.dim(), sys.dim());
    for (const auto& f : split.F) sum += f;
    CHECK(sum == I);
    CHECK(split.Psi * split.PsiInv == I);
    CHECK(split.PsiInv * split.Psi == I);
    CHECK(split.calR.pow(static_cast<unsigned>(sys.d + 1)).is_zero());
    CHECK(split.calL.pow(static_cast<unsigned>(sys.d + 1)).is_zero());
    for (std::size_t i = 0; i <= sys.d; ++i) {
      CHECK(split.U[i].dim() == sys.shape[i]);
      CHECK(((split.calR - sys.A + sys.theta[i] * I) * split.F[i]).is_zero());
      CHECK(((split.calL - sys.Astar + sys.thetastar[i] * I) * split.F[i]).is_zero());
    }
    CHECK(all_zero(check_section7(sys, split)));
    CHECK(all_ok(check_split_bijectivity(sys, split)));
  }
}

TEST_CASE("split bijectivity ranks") {
  const auto sys = krawtchouk(3, q(1, 2));
  const auto split = compute_split(sys);
  CHECK(rank(split.calR.pow(3) * split.F[0]) == 1);
  for (const auto& e : check_split_bijectivity(sys, split)) CHECK(e.rank == 1);
}

TEST_CASE("check_section7 over GF(101)") {
  const Field f = Field::prime(101);
  const auto sys = construct_krawtchouk({3, Scalar(f, 2L)}).first;
  const auto split = compute_split(sys);
  CHECK(all_zero(check_section7(sys, split)));
}

TEST_CASE("check_section7 detects a corrupted split map") {
  const auto sys = krawtchouk(2, q(1, 3));
  auto split = compute_split(sys);
  split.calR.at(0, 0) += q(1);
  CHECK_FALSE(all_zero(check_section7(sys, split)));
}
