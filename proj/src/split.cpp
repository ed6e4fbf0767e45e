#include "tdpair/split.hpp"

#include "tdpair/error.hpp"

namespace tdpair {

SplitDecomposition compute_split(const TridiagonalSystem& sys) {
  const std::size_t d = sys.d, n = sys.dim();
  const Field f = sys.field();
  auto fail = [](const std::string& what) { throw Error(Errc::internal_inconsistency, what); };

  // prefix[i] = E*_0V + ... + E*_iV, suffix[i] = E_iV + ... + E_dV
  std::vector<Subspace> prefix(d + 1), suffix(d + 1);
  prefix[0] = image(sys.Estar[0]);
  for (std::size_t i = 1; i <= d; ++i) prefix[i] = subspace_sum(prefix[i - 1], image(sys.Estar[i]));
  suffix[d] = image(sys.E[d]);
  for (std::size_t i = d; i-- > 0;) suffix[i] = subspace_sum(suffix[i + 1], image(sys.E[i]));

  SplitDecomposition out;
  for (std::size_t i = 0; i <= d; ++i) {
    out.U.push_back(subspace_intersect(prefix[i], suffix[i]));
    if (out.U[i].dim() != sys.shape[i]) fail("dim U_" + std::to_string(i) + " differs from rho_i");
  }
  try {
    out.F = projectors_from_direct_sum(out.U);
  } catch (const Error& e) {
    fail(e.what());
  }

  // Partial sums of the U_i recover both flags.
  Subspace acc(f, n);
  for (std::size_t i = 0; i <= d; ++i) {
    acc = subspace_sum(acc, out.U[i]);
    if (acc != prefix[i]) fail("U_0 + ... + U_i != E*_0V + ... + E*_iV");
  }
  acc = Subspace(f, n);
  for (std::size_t i = d + 1; i-- > 0;) {
    acc = subspace_sum(acc, out.U[i]);
    if (acc != suffix[i]) fail("U_i + ... + U_d != E_iV + ... + E_dV");
  }

  const Matrix id = Matrix::identity(f, n);
  Matrix sum(f, n, n);
  out.calR = sys.A;
  out.calL = sys.Astar;
  out.Psi = Matrix(f, n, n);
  out.PsiInv = Matrix(f, n, n);
  for (std::size_t i = 0; i <= d; ++i) {
    const Matrix& Fi = out.F[i];
    if (Fi * Fi != Fi) fail("F_i is not idempotent");
    sum += Fi;
    out.calR -= sys.theta[i] * Fi;
    out.calL -= sys.thetastar[i] * Fi;
    out.Psi += Fi * sys.Estar[i];
    out.PsiInv += sys.Estar[i] * Fi;
  }
  if (sum != id) fail("sum of F_i is not I");
  if (out.Psi * out.PsiInv != id || out.PsiInv * out.Psi != id) fail("Psi and PsiInv are not inverse");
  if (!out.calR.pow(static_cast<unsigned>(d + 1)).is_zero()) fail("calR^{d+1} != 0");
  if (!out.calL.pow(static_cast<unsigned>(d + 1)).is_zero()) fail("calL^{d+1} != 0");

  for (std::size_t i = 0; i <= d; ++i) {
    const Matrix& Fi = out.F[i];
    const Matrix& Ei = sys.Estar[i];
    const Matrix raised = out.calR * Fi;
    if (i < d ? out.F[i + 1] * raised != raised : !raised.is_zero()) fail("calR F_iV is not inside F_{i+1}V");
    const Matrix lowered = out.calL * Fi;
    if (i > 0 ? out.F[i - 1] * lowered != lowered : !lowered.is_zero()) fail("calL F_iV is not inside F_{i-1}V");
    for (std::size_t j = i + 1; j <= d; ++j) {
      if (!(out.F[j] * Ei).is_zero() || !(sys.Estar[j] * Fi).is_zero()) fail("F_j E*_i or E*_j F_i nonzero");
    }
    if (Fi * Ei * Fi != Fi || Ei * Fi * Ei != Ei) fail("F_i E*_i F_i != F_i or E*_i F_i E*_i != E*_i");
    // Psi carries E*_iV onto F_iV.
    if (image(out.Psi * Ei) != out.U[i]) fail("Psi does not send E*_iV onto F_iV");
    if (image(out.PsiInv * Fi) != image(Ei)) fail("PsiInv does not send F_iV onto E*_iV");
    const std::size_t rho = sys.shape[i];
    if (rank(Fi * Ei) != rho || rank(Ei * Fi) != rho || rank(Fi * sys.E[i]) != rho || rank(sys.E[i] * Fi) != rho) {
      fail("rank of F_i E*_i, E*_i F_i, F_i E_i or E_i F_i is not rho_i");
    }
  }
  return out;
}

std::vector<Residual> check_section7(const TridiagonalSystem& sys, const SplitDecomposition& split) {
  const long d = static_cast<long>(sys.d);
  const std::size_t n = sys.dim();
  const Field f = sys.field();
  const Matrix id = Matrix::identity(f, n);
  const auto& F = split.F;
  const Matrix &cR = split.calR, &cL = split.calL;
  std::vector<Residual> out;

  for (long i = 0; i <= d; ++i) {
    for (long j = 0; j <= d; ++j) {
      if (i - j != 0 && i - j != 1) out.push_back(matrix_residual("FAF_zero", {i, j}, F[i] * sys.A * F[j]));
      if (j - i != 0 && j - i != 1) out.push_back(matrix_residual("FAsF_zero", {i, j}, F[i] * sys.Astar * F[j]));
    }
  }
  for (long i = 0; i <= d; ++i) {
    const Matrix& Fi = F[i];
    out.push_back(matrix_residual("FAF_diag", {i}, F[i] * sys.A * Fi - sys.theta[i] * Fi));
    out.push_back(matrix_residual("FAsF_diag", {i}, F[i] * sys.Astar * Fi - sys.thetastar[i] * Fi));
    if (i < d) {
      out.push_back(matrix_residual("FAF_raise", {i}, F[i + 1] * sys.A * Fi - cR * Fi));
      out.push_back(matrix_residual("calR_intertwine", {i}, cR * Fi - F[i + 1] * cR));
    }
    if (i > 0) {
      out.push_back(matrix_residual("FAsF_lower", {i}, F[i - 1] * sys.Astar * Fi - cL * Fi));
      out.push_back(matrix_residual("calL_intertwine", {i}, cL * Fi - F[i - 1] * cL));
    }
    out.push_back(matrix_residual("calR_nilpotent", {i}, cR.pow(static_cast<unsigned>(d - i + 1)) * Fi));
    out.push_back(matrix_residual("calL_nilpotent", {i}, cL.pow(static_cast<unsigned>(i + 1)) * Fi));
    out.push_back(matrix_residual("calR_on_U", {i}, (cR - sys.A + sys.theta[i] * id) * Fi));
    out.push_back(matrix_residual("calL_on_U", {i}, (cL - sys.Astar + sys.thetastar[i] * id) * Fi));

    const Matrix& Ei = sys.Estar[i];
    for (long j = i + 1; j <= d; ++j) {
      out.push_back(matrix_residual("FjEsi", {i, j}, F[j] * Ei));
      out.push_back(matrix_residual("EsjFi", {i, j}, sys.Estar[j] * Fi));
    }
    out.push_back(matrix_residual("FEsF", {i}, Fi * Ei * Fi - Fi));
    out.push_back(matrix_residual("EsFEs", {i}, Ei * Fi * Ei - Ei));
  }
  out.push_back(matrix_residual("Psi_inverse", {}, split.Psi * split.PsiInv - id));
  out.push_back(matrix_residual("PsiInv_inverse", {}, split.PsiInv * split.Psi - id));
  return out;
}

std::vector<RankEntry> check_split_bijectivity(const TridiagonalSystem& sys, const SplitDecomposition& split) {
  const std::size_t d = sys.d, n = sys.dim();
  std::vector<RankEntry> out;
  for (std::size_t i = 0; i <= d; ++i) {
    Matrix rpow = Matrix::identity(sys.field(), n);
    Matrix lpow = rpow;
    for (std::size_t j = i; j <= d; ++j) {
      const std::size_t expected = closed_form_rank(sys.shape, i, j);
      out.push_back({"calR", i, j, rank(rpow * split.F[i]), expected});
      out.push_back({"calL", i, j, rank(lpow * split.F[j]), expected});
      rpow = split.calR * rpow;
      lpow = split.calL * lpow;
    }
  }
  for (std::size_t i = 0; i <= d; ++i) {
    const std::size_t rho = sys.shape[i];
    out.push_back({"FEs", i, i, rank(split.F[i] * sys.Estar[i]), rho});
    out.push_back({"EsF", i, i, rank(sys.Estar[i] * split.F[i]), rho});
    out.push_back({"FE", i, i, rank(split.F[i] * sys.E[i]), rho});
    out.push_back({"EF", i, i, rank(sys.E[i] * split.F[i]), rho});
  }
  return out;
}

}  // namespace tdpair
