#include "tdpair/rfl.hpp"

#include "tdpair/error.hpp"
#include "tdpair/linalg.hpp"

namespace tdpair {

RFLDecomposition compute_rfl(const TridiagonalSystem& sys) {
  const std::size_t d = sys.d, n = sys.dim();
  const auto& Es = sys.Estar;
  RFLDecomposition out{Matrix(sys.field(), n, n), Matrix(sys.field(), n, n), Matrix(sys.field(), n, n)};
  for (std::size_t i = 0; i <= d; ++i) {
    out.F += Es[i] * sys.A * Es[i];
    if (i < d) out.R += Es[i + 1] * sys.A * Es[i];
    if (i > 0) out.L += Es[i - 1] * sys.A * Es[i];
  }

  auto fail = [](const std::string& what) { throw Error(Errc::internal_inconsistency, what); };
  if (out.R + out.F + out.L != sys.A) fail("A != R + F + L");
  if (!out.R.pow(static_cast<unsigned>(d + 1)).is_zero()) fail("R is not nilpotent of order d+1");
  if (!out.L.pow(static_cast<unsigned>(d + 1)).is_zero()) fail("L is not nilpotent of order d+1");
  for (std::size_t i = 0; i <= d; ++i) {
    const Matrix flat = Es[i] * sys.A * Es[i];
    if (out.F * Es[i] != flat || Es[i] * out.F != flat) fail("F does not act as E*_i A E*_i");
    if (i < d) {
      const Matrix up = Es[i + 1] * sys.A * Es[i];
      if (out.R * Es[i] != up || Es[i + 1] * out.R != up) fail("R does not act as E*_{i+1} A E*_i");
    } else if (!(out.R * Es[d]).is_zero()) {
      fail("R E*_d != 0");
    }
    if (i > 0) {
      const Matrix down = Es[i - 1] * sys.A * Es[i];
      if (out.L * Es[i] != down || Es[i - 1] * out.L != down) fail("L does not act as E*_{i-1} A E*_i");
    } else if (!(out.L * Es[0]).is_zero()) {
      fail("L E*_0 != 0");
    }
    if (!(out.R.pow(static_cast<unsigned>(d - i + 1)) * Es[i]).is_zero()) fail("R^{d-i+1} E*_i != 0");
    if (!(out.L.pow(static_cast<unsigned>(i + 1)) * Es[i]).is_zero()) fail("L^{i+1} E*_i != 0");
  }
  return out;
}

SectionFiveCoefficients section5_coefficients(const TridiagonalSystem& sys, const RelationParameters& params) {
  const long d = static_cast<long>(sys.d);
  auto ts = [&](long k) { return extended_thetastar(sys, params, k); };
  SectionFiveCoefficients c;
  c.gplus.resize(sys.d + 1);
  c.gminus.resize(sys.d + 1);
  c.eplus.resize(sys.d + 1);
  c.eminus.resize(sys.d + 1);
  for (long i = 2; i <= d; ++i) {
    // theta*_{i-3} only exists for i >= 2, where i-3 >= -1.
    c.gplus[i] = (ts(i) - ts(i + 1)) / (ts(i) - ts(i - 2));
    c.gminus[i] = (ts(i - 2) - ts(i - 3)) / (ts(i - 2) - ts(i));
  }
  for (long i = 1; i <= d - 1; ++i) c.eplus[i] = (ts(i) - ts(i + 2)) / (ts(i) - ts(i - 1));
  for (long i = 2; i <= d; ++i) c.eminus[i] = (ts(i - 1) - ts(i - 3)) / (ts(i - 1) - ts(i));
  return c;
}

namespace {

Residual nonzero_check(const char* name, long i, const std::optional<Scalar>& value, Field f) {
  const bool holds = value && !value->is_zero();
  return scalar_residual(name, {i}, holds ? Scalar::zero(f) : Scalar::one(f));
}

// The coefficient times op; when the coefficient is an indeterminate the
// operator must already vanish, and the term is dropped.
Matrix weighted(const std::optional<Scalar>& coeff, const Matrix& op, const char* what) {
  if (coeff) return *coeff * op;
  if (!op.is_zero()) {
    throw Error(Errc::internal_inconsistency, std::string("indeterminate multiplies a nonzero term: ") + what);
  }
  return Matrix(op.field(), op.rows(), op.cols());
}

}  // namespace

std::vector<Residual> check_section5(const TridiagonalSystem& sys, const RelationParameters& params,
                                     const RFLDecomposition& rfl) {
  const long d = static_cast<long>(sys.d);
  const Field f = sys.field();
  const auto c = section5_coefficients(sys, params);
  const auto& Es = sys.Estar;
  const Matrix &R = rfl.R, &F = rfl.F, &L = rfl.L;
  const Matrix L2 = L * L, R2 = R * R, F2 = F * F;
  const Scalar& beta = params.beta;
  const Scalar& gamma = params.gamma;
  const Scalar& rho = params.rho;
  const Scalar two(f, 2L);
  auto ts = [&](long k) { return extended_thetastar(sys, params, k); };
  std::vector<Residual> out;

  for (long i = 2; i <= d; ++i) {
    const Matrix& Ei = Es[i];
    const Matrix& Em2 = Es[i - 2];
    const Matrix llf = (*c.gminus[i] * (F * L2) + L * F * L + *c.gplus[i] * (L2 * F) - gamma * L2) * Ei;
    out.push_back(matrix_residual("LLF", {i}, llf));
    const Matrix rrf = (*c.gminus[i] * (R2 * F) + R * F * R + *c.gplus[i] * (F * R2) - gamma * R2) * Em2;
    out.push_back(matrix_residual("RRF", {i}, rrf));
  }

  for (long i = 1; i <= d; ++i) {
    const Matrix& Ei = Es[i];
    const Matrix& Em1 = Es[i - 1];
    Matrix lower = weighted(c.eminus[i], R * L2 * Ei, "R L^2 E*_i") + (beta + two) * (L * R * L * Ei) +
                   weighted(c.eplus[i], L2 * R * Ei, "L^2 R E*_i") + (L * F2 - beta * (F * L * F) + F2 * L) * Ei -
                   (gamma * (L * F + F * L) + rho * L) * Ei;
    out.push_back(matrix_residual("LRL", {i}, lower));
    Matrix raise = weighted(c.eminus[i], R2 * L * Em1, "R^2 L E*_{i-1}") + (beta + two) * (R * L * R * Em1) +
                   weighted(c.eplus[i], L * R2 * Em1, "L R^2 E*_{i-1}") +
                   (F2 * R - beta * (F * R * F) + R * F2) * Em1 - (gamma * (F * R + R * F) + rho * R) * Em1;
    out.push_back(matrix_residual("RLR", {i}, raise));
  }

  for (long i = 0; i <= d; ++i) {
    const Matrix flat = ((ts(i) - ts(i + 1)) * commutator(F, L * R) - (ts(i - 1) - ts(i)) * commutator(F, R * L)) * Es[i];
    out.push_back(matrix_residual("F_LR_RL", {i}, flat));
  }

  for (long i = 2; i <= d - 1; ++i) out.push_back(nonzero_check("gplus_nonzero", i, c.gplus[i], f));
  for (long i = 3; i <= d; ++i) out.push_back(nonzero_check("gminus_nonzero", i, c.gminus[i], f));
  for (long i = 1; i <= d - 2; ++i) out.push_back(nonzero_check("eplus_nonzero", i, c.eplus[i], f));
  for (long i = 3; i <= d; ++i) out.push_back(nonzero_check("eminus_nonzero", i, c.eminus[i], f));
  return out;
}

std::vector<RankEntry> check_section10(const TridiagonalSystem& sys, const RFLDecomposition& rfl) {
  const std::size_t d = sys.d, n = sys.dim();
  std::vector<RankEntry> out;
  // Powers built incrementally along each row of the table.
  for (std::size_t i = 0; i <= d; ++i) {
    Matrix rpow = Matrix::identity(sys.field(), n);
    Matrix lpow = rpow, apow = rpow, aspow = rpow;
    for (std::size_t j = i; j <= d; ++j) {
      const std::size_t expected = closed_form_rank(sys.shape, i, j);
      out.push_back({"R", i, j, rank(rpow * sys.Estar[i]), expected});
      out.push_back({"L", i, j, rank(lpow * sys.Estar[j]), expected});
      out.push_back({"EsAEs", i, j, rank(sys.Estar[i] * apow * sys.Estar[j]), expected});
      out.push_back({"EsAEs_rev", i, j, rank(sys.Estar[j] * apow * sys.Estar[i]), expected});
      out.push_back({"EAsE", i, j, rank(sys.E[i] * aspow * sys.E[j]), expected});
      out.push_back({"EAsE_rev", i, j, rank(sys.E[j] * aspow * sys.E[i]), expected});
      rpow = rfl.R * rpow;
      lpow = rfl.L * lpow;
      apow = sys.A * apow;
      aspow = sys.Astar * aspow;
    }
  }
  return out;
}

}  // namespace tdpair
