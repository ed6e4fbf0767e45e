#include "tdpair/krawtchouk.hpp"

#include "tdpair/bridge.hpp"
#include "tdpair/error.hpp"
#include "tdpair/linalg.hpp"
#include "tdpair/suite.hpp"

namespace tdpair {

std::vector<Scalar> krawtchouk_eigenvalues(Field field, std::size_t d) {
  std::vector<Scalar> out;
  for (std::size_t i = 0; i <= d; ++i) out.emplace_back(field, static_cast<long>(d) - 2 * static_cast<long>(i));
  return out;
}

bool is_krawtchouk_type(const TridiagonalSystem& sys) {
  const auto expected = krawtchouk_eigenvalues(sys.field(), sys.d);
  return sys.theta == expected && sys.thetastar == expected;
}

namespace {

void require_admissible(const KrawtchoukParams& params) {
  const Field f = params.p.field();
  if (!f.is_rational() && (f.modulus() == 2 || f.modulus() <= params.d)) {
    throw Error(Errc::invalid_argument, "characteristic must be 0 or an odd prime greater than d");
  }
  if (params.p.is_zero() || params.p.is_one()) throw Error(Errc::invalid_argument, "p must avoid 0 and 1");
}

}  // namespace

LeonardData krawtchouk_closed_forms(const KrawtchoukParams& params) {
  require_admissible(params);
  const Field f = params.p.field();
  const Scalar& p = params.p;
  const Scalar one = Scalar::one(f), two(f, 2L), four(f, 4L);
  const long d = static_cast<long>(params.d);
  LeonardData data;
  data.d = params.d;
  data.theta = krawtchouk_eigenvalues(f, params.d);
  data.thetastar = data.theta;
  for (long i = 0; i <= d; ++i) {
    const Scalar si(f, i);
    data.a.push_back((one - two * p) * Scalar(f, d - 2 * i));
    data.taustar.push_back(taustar_at(data.thetastar, static_cast<std::size_t>(i)));
    if (i < d) data.b.push_back(two * p * Scalar(f, d - i));
    if (i >= 1) {
      data.c.push_back(two * (one - p) * si);
      data.x.push_back(four * p * (one - p) * si * Scalar(f, d - i + 1));
      data.phi.push_back(four * p * si * Scalar(f, i - d - 1));
    }
  }
  return data;
}

std::pair<Matrix, Matrix> krawtchouk_pair(const KrawtchoukParams& params) {
  const auto data = krawtchouk_closed_forms(params);
  const Field f = params.p.field();
  const std::size_t n = params.d + 1;
  Matrix A(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    A.at(i, i) = data.a[i];
    if (i + 1 < n) {
      A.at(i, i + 1) = data.b[i];
      A.at(i + 1, i) = data.c[i];
    }
  }
  return {A, Matrix::diagonal(data.thetastar)};
}

std::pair<TridiagonalSystem, LeonardData> construct_krawtchouk(const KrawtchoukParams& params) {
  const auto expected = krawtchouk_closed_forms(params);
  const auto [A, As] = krawtchouk_pair(params);
  const auto verdict = verify_pair(A, As);
  if (!verdict.ok()) {
    throw Error(Errc::internal_inconsistency,
                "Krawtchouk pair rejected: " + std::string(to_string(verdict.failure)) + ", " + verdict.detail);
  }
  auto sys = select_system(verdict.systems, expected.theta, expected.thetastar);
  if (!sys) throw Error(Errc::internal_inconsistency, "Krawtchouk ordering is not standard");
  const auto split = compute_split(*sys);
  auto data = derive_leonard_data(*sys, split);
  if (data.a != expected.a || data.b != expected.b || data.c != expected.c || data.x != expected.x ||
      data.phi != expected.phi) {
    throw Error(Errc::internal_inconsistency, "derived Leonard data disagrees with the closed forms");
  }
  return {std::move(*sys), std::move(data)};
}

std::vector<Residual> check_section12(const TridiagonalSystem& sys, const RFLDecomposition& rfl,
                                      const SplitDecomposition& split) {
  if (!is_krawtchouk_type(sys)) throw Error(Errc::type_mismatch, "system is not of Krawtchouk type");
  const Field f = sys.field();
  const std::size_t d = sys.d, n = sys.dim();
  const Scalar two(f, 2L), four(f, 4L), eight(f, 8L), half = Scalar::one(f) / two;
  const Matrix &A = sys.A, &As = sys.Astar, &R = rfl.R, &F = rfl.F, &L = rfl.L;
  const Matrix &cR = split.calR, &cL = split.calL;
  const Matrix id = Matrix::identity(f, n);
  std::vector<Residual> out;

  const Matrix AAs = commutator(A, As);
  const Matrix AsA = commutator(As, A);
  out.push_back(matrix_residual("dolan_grady", {}, commutator(A, commutator(A, AAs)) - four * AAs));
  out.push_back(matrix_residual("dolan_grady_dual", {}, commutator(As, commutator(As, AsA)) - four * AsA));

  out.push_back(matrix_residual("Astar_L", {}, commutator(As, L) - two * L));
  out.push_back(matrix_residual("Astar_F", {}, commutator(As, F)));
  out.push_back(matrix_residual("Astar_R", {}, commutator(As, R) + two * R));

  const Matrix double_bracket = commutator(As, AsA);
  out.push_back(matrix_residual("R_from_brackets", {}, R - (double_bracket - two * AsA) / eight));
  out.push_back(matrix_residual("F_from_brackets", {}, F - (A - double_bracket / four)));
  out.push_back(matrix_residual("L_from_brackets", {}, L - (double_bracket + two * AsA) / eight));

  out.push_back(matrix_residual("LLF", {}, commutator(L, commutator(L, F))));
  out.push_back(matrix_residual("RRF", {}, commutator(R, commutator(R, F))));
  out.push_back(matrix_residual("FFL", {}, commutator(F, commutator(F, L)) - two * commutator(L, commutator(L, R)) - four * L));
  out.push_back(matrix_residual("FFR", {}, commutator(F, commutator(F, R)) - two * commutator(R, commutator(R, L)) - four * R));
  out.push_back(matrix_residual("FLR", {}, commutator(F, commutator(L, R))));

  const Matrix expL = nilpotent_exp_scaled(cL, half);
  const Matrix expLinv = nilpotent_exp_scaled(cL, -half);
  out.push_back(matrix_residual("Psi_exp", {}, split.Psi - expL));
  out.push_back(matrix_residual("PsiInv_exp", {}, split.PsiInv - expLinv));
  out.push_back(matrix_residual("exp_inverse", {}, expL * expLinv - id));

  out.push_back(matrix_residual("exp_R", {}, expL * R - cR * expL));
  out.push_back(matrix_residual("exp_F", {}, expL * F - (A - cR + commutator(cL, cR) / two) * expL));
  out.push_back(matrix_residual("exp_L", {}, expL * L - (-cL + commutator(cL, commutator(cL, cR)) / eight) * expL));

  Matrix adL = commutator(cL, commutator(cL, cR));  // (ad calL)^2 (calR)
  Matrix adR = commutator(cR, commutator(cR, cL));
  for (std::size_t l = 2; l <= d + 1; ++l) {
    adL = commutator(cL, adL);
    adR = commutator(cR, adR);
    out.push_back(matrix_residual("ad_calL", {static_cast<long>(l)}, adL));
    out.push_back(matrix_residual("ad_calR", {static_cast<long>(l)}, adR));
  }
  out.push_back(matrix_residual("triple_calL", {}, commutator(cL, commutator(cL, commutator(cL, cR)))));
  out.push_back(matrix_residual("triple_calR", {}, commutator(cR, commutator(cR, commutator(cR, cL)))));

  for (std::size_t j = 2; j <= d; ++j) {
    out.push_back(scalar_residual("cubic_coefficient_zero", {static_cast<long>(j)}, cubic_coefficient(sys, j)));
  }
  return out;
}

KroneckerOutcome kronecker_sum_candidate(const TridiagonalSystem& s1, const TridiagonalSystem& s2) {
  if (s1.field() != s2.field()) throw Error(Errc::field_mismatch, "systems live over different fields");
  const Matrix i1 = Matrix::identity(s1.field(), s1.dim());
  const Matrix i2 = Matrix::identity(s2.field(), s2.dim());
  const Matrix A = kronecker(s1.A, i2) + kronecker(i1, s2.A);
  const Matrix As = kronecker(s1.Astar, i2) + kronecker(i1, s2.Astar);
  KroneckerOutcome out;
  out.verdict = verify_pair(A, As);
  for (const auto& sys : out.verdict.systems) {
    out.suite_passed.push_back(run_check_suite(sys).pass);
    out.shapes.push_back(sys.shape);
  }
  return out;
}

}  // namespace tdpair
