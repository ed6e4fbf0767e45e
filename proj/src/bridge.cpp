#include "tdpair/bridge.hpp"

#include <algorithm>

#include "tdpair/error.hpp"

namespace tdpair {

namespace {

std::vector<Matrix> powers(const Matrix& m, std::size_t top) {
  std::vector<Matrix> out{Matrix::identity(m.field(), m.rows())};
  for (std::size_t k = 1; k <= top; ++k) out.push_back(out.back() * m);
  return out;
}

Scalar nonzero(Scalar value) {
  if (value.is_zero()) throw Error(Errc::internal_inconsistency, "vanishing denominator");
  return value;
}

}  // namespace

Scalar descent_denominator(const std::vector<Scalar>& th, std::size_t i, std::size_t j) {
  Scalar out = Scalar::one(th[0].field());
  for (std::size_t k = i; k < j; ++k) out *= th[j] - th[k];
  return nonzero(out);
}

Scalar ascent_denominator(const std::vector<Scalar>& th, std::size_t i, std::size_t j) {
  Scalar out = Scalar::one(th[0].field());
  for (std::size_t k = i + 1; k <= j; ++k) out *= th[i] - th[k];
  return nonzero(out);
}

std::vector<Residual> check_descent(const TridiagonalSystem& sys, const SplitDecomposition& split) {
  const std::size_t d = sys.d;
  const auto& ths = sys.thetastar;
  const auto& F = split.F;
  const auto& Es = sys.Estar;
  const auto Lp = powers(split.calL, d);
  std::vector<Residual> out;
  for (std::size_t i = 0; i <= d; ++i) {
    for (std::size_t j = i; j <= d; ++j) {
      const std::vector<long> idx{static_cast<long>(i), static_cast<long>(j)};
      out.push_back(matrix_residual("FEs_closed", idx,
                                    F[i] * Es[j] - Lp[j - i] / descent_denominator(ths, i, j) * (F[j] * Es[j])));
      out.push_back(matrix_residual("EsF_closed", idx,
                                    Es[i] * F[j] - (Es[i] * F[i]) * (Lp[j - i] / ascent_denominator(ths, i, j))));
      if (i < j) {
        out.push_back(matrix_residual("FEs_step", idx,
                                      F[i] * Es[j] - split.calL / nonzero(ths[j] - ths[i]) * (F[i + 1] * Es[j])));
        out.push_back(matrix_residual("EsF_step", idx,
                                      Es[i] * F[j] - (Es[i] * F[j - 1]) * (split.calL / nonzero(ths[i] - ths[j]))));
      }
    }
  }
  return out;
}

Matrix master_operator(const TridiagonalSystem& sys, const SplitDecomposition& split, std::size_t i, std::size_t j) {
  const std::size_t d = sys.d, n = sys.dim();
  const auto& ths = sys.thetastar;
  const auto Lp = powers(split.calL, d + 1);
  Matrix out(sys.field(), n, n);
  for (std::size_t s = i; s <= j; ++s) {
    out += sys.theta[s] * (Lp[s - i] / ascent_denominator(ths, i, s)) * (Lp[j - s] / descent_denominator(ths, s, j));
  }
  // r - s = 1 with i <= r <= d and 0 <= s <= j.
  for (std::size_t r = std::max<std::size_t>(i, 1); r <= std::min(d, j + 1); ++r) {
    const std::size_t s = r - 1;
    out += (Lp[r - i] / ascent_denominator(ths, i, r)) * split.calR * (Lp[j - s] / descent_denominator(ths, s, j));
  }
  return out;
}

Matrix master_identity_rhs(const TridiagonalSystem& sys, const SplitDecomposition& split, std::size_t i,
                           std::size_t j) {
  return master_operator(sys, split, i, j) * split.F[j] * sys.Estar[j];
}

Matrix corollary_raise(const TridiagonalSystem&, const SplitDecomposition& split, std::size_t) { return split.calR; }

Matrix corollary_flat(const TridiagonalSystem& sys, const SplitDecomposition& split, std::size_t j) {
  const std::size_t d = sys.d;
  const auto& ths = sys.thetastar;
  const Matrix &cR = split.calR, &cL = split.calL;
  Matrix out = sys.theta[j] * Matrix::identity(sys.field(), sys.dim());
  if (j > 0) out += cR * cL / (ths[j] - ths[j - 1]);
  if (j < d) out += cL * cR / (ths[j] - ths[j + 1]);
  return out;
}

Matrix corollary_lower(const TridiagonalSystem& sys, const SplitDecomposition& split, std::size_t j) {
  if (j == 0) throw Error(Errc::invalid_argument, "the lowering form needs j >= 1");
  const std::size_t d = sys.d;
  const auto& th = sys.theta;
  const auto& ths = sys.thetastar;
  const Matrix &cR = split.calR, &cL = split.calL;
  const Scalar gap = ths[j - 1] - ths[j];
  Matrix out = (th[j] - th[j - 1]) / gap * cL - cL * cR * cL / (gap * gap);
  if (j >= 2) out += cR * cL * cL / ((ths[j] - ths[j - 1]) * (ths[j] - ths[j - 2]));
  if (j + 1 <= d) out += cL * cL * cR / (gap * (ths[j - 1] - ths[j + 1]));
  return out;
}

std::vector<Residual> check_master_identity(const TridiagonalSystem& sys, const SplitDecomposition& split) {
  const std::size_t d = sys.d;
  std::vector<Residual> out;
  for (std::size_t i = 0; i <= d; ++i) {
    for (std::size_t j = 0; j <= d; ++j) {
      const std::vector<long> idx{static_cast<long>(i), static_cast<long>(j)};
      const Matrix lhs = split.F[i] * sys.Estar[i] * sys.A * sys.Estar[j];
      const Matrix op = master_operator(sys, split, i, j);
      out.push_back(matrix_residual("expansion", idx, lhs - op * split.F[j] * sys.Estar[j]));
      if (i == j + 1) out.push_back(matrix_residual("raise_form", idx, op - corollary_raise(sys, split, j)));
      if (i == j) out.push_back(matrix_residual("flat_form", idx, op - corollary_flat(sys, split, j)));
      if (i + 1 == j) out.push_back(matrix_residual("lower_form", idx, op - corollary_lower(sys, split, j)));
    }
  }
  return out;
}

std::vector<Residual> check_diagrams(const TridiagonalSystem& sys, const SplitDecomposition& split,
                                     const RFLDecomposition& rfl) {
  const std::size_t d = sys.d;
  const Matrix& Psi = split.Psi;
  std::vector<Residual> out;
  auto master_residual = [&](std::size_t i, std::size_t j) {
    return split.F[i] * sys.Estar[i] * sys.A * sys.Estar[j] - master_identity_rhs(sys, split, i, j);
  };
  for (std::size_t j = 0; j <= d; ++j) {
    const Matrix& Ej = sys.Estar[j];
    const Matrix down = Psi * Ej;
    const long jj = static_cast<long>(j);
    if (j < d) {
      const Matrix res = Psi * rfl.R * Ej - corollary_raise(sys, split, j) * down;
      out.push_back(matrix_residual("raise", {jj}, res));
      out.push_back(matrix_residual("raise_matches_expansion", {jj}, res - master_residual(j + 1, j)));
    }
    const Matrix flat = Psi * rfl.F * Ej - corollary_flat(sys, split, j) * down;
    out.push_back(matrix_residual("flat", {jj}, flat));
    out.push_back(matrix_residual("flat_matches_expansion", {jj}, flat - master_residual(j, j)));
    if (j > 0) {
      const Matrix res = Psi * rfl.L * Ej - corollary_lower(sys, split, j) * down;
      out.push_back(matrix_residual("lower", {jj}, res));
      out.push_back(matrix_residual("lower_matches_expansion", {jj}, res - master_residual(j - 1, j)));
    }
  }
  return out;
}

Scalar cubic_coefficient(const TridiagonalSystem& sys, std::size_t j) {
  const auto& th = sys.theta;
  const auto& ths = sys.thetastar;
  return (th[j - 1] - th[j - 2]) * (ths[j - 1] - ths[j - 2]) - (th[j - 1] - th[j]) * (ths[j - 1] - ths[j]);
}

namespace {

// The dual sum, in the order displayed: calR powers on the outside, calL in
// the middle, denominators over theta.
Matrix dual_operator(const TridiagonalSystem& sys, const SplitDecomposition& split, std::size_t i, std::size_t j,
                     const std::vector<Matrix>& Rp) {
  const std::size_t d = sys.d, n = sys.dim();
  const auto& th = sys.theta;
  Matrix out(sys.field(), n, n);
  for (std::size_t s = i; s <= j; ++s) {
    out += sys.thetastar[s] * (Rp[j - s] / descent_denominator(th, s, j)) * (Rp[s - i] / ascent_denominator(th, i, s));
  }
  for (std::size_t r = std::max<std::size_t>(i, 1); r <= std::min(d, j + 1); ++r) {
    const std::size_t s = r - 1;
    out += (Rp[j - s] / descent_denominator(th, s, j)) * split.calL * (Rp[r - i] / ascent_denominator(th, i, r));
  }
  return out;
}

}  // namespace

std::vector<Residual> check_section9(const TridiagonalSystem& sys, const SplitDecomposition& split,
                                     const RelationParameters& params) {
  const std::size_t d = sys.d;
  const auto Rp = powers(split.calR, d + 1);
  const Matrix &cR = split.calR, &cL = split.calL;
  std::vector<Residual> out;
  for (std::size_t i = 0; i <= d; ++i) {
    for (std::size_t j = i + 2; j <= d; ++j) {
      const std::vector<long> idx{static_cast<long>(i), static_cast<long>(j)};
      out.push_back(matrix_residual("sum_on_Fj", idx, master_operator(sys, split, i, j) * split.F[j]));
      out.push_back(matrix_residual("dual_sum_on_Fi", idx, dual_operator(sys, split, i, j, Rp) * split.F[i]));
    }
  }
  const Scalar b1 = params.beta + Scalar::one(sys.field());
  const Matrix L2 = cL * cL, R2 = cR * cR;
  const Matrix omega_l = cR * L2 * cL - b1 * (cL * cR * L2) + b1 * (L2 * cR * cL) - L2 * cL * cR;
  const Matrix omega_r = R2 * cR * cL - b1 * (R2 * cL * cR) + b1 * (cR * cL * R2) - cL * R2 * cR;
  for (std::size_t j = 2; j <= d; ++j) {
    const Scalar e = cubic_coefficient(sys, j);
    const long jj = static_cast<long>(j);
    out.push_back(matrix_residual("cubic_L", {jj}, (omega_l - b1 * e * L2) * split.F[j]));
    out.push_back(matrix_residual("cubic_R", {jj}, (omega_r - b1 * e * R2) * split.F[j - 2]));
  }
  return out;
}

}  // namespace tdpair
