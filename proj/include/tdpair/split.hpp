#pragma once

#include <vector>

#include "tdpair/linalg.hpp"
#include "tdpair/residual.hpp"
#include "tdpair/system.hpp"

namespace tdpair {

/// U_i = (E*_0V + ... + E*_iV) and (E_iV + ... + E_dV) intersected, with the
/// projections F_i onto them and the split maps built from those.
struct SplitDecomposition {
  std::vector<Subspace> U;
  std::vector<Matrix> F;
  Matrix calR, calL;
  /// sum F_l E*_l and its inverse sum E*_l F_l.
  Matrix Psi, PsiInv;
};

/// Throws internal_inconsistency if any structural fact fails.
SplitDecomposition compute_split(const TridiagonalSystem& sys);

/// F_i A F_j and F_i A* F_j block structure, the split-map intertwining
/// identities, nilpotency, and the F/E* compatibility facts.
std::vector<Residual> check_section7(const TridiagonalSystem& sys, const SplitDecomposition& split);

/// rank calR^{j-i} F_i and calL^{j-i} F_j for i <= j against the closed form,
/// plus the diagonal ranks of F_i E*_i, E*_i F_i, F_i E_i, E_i F_i.
std::vector<RankEntry> check_split_bijectivity(const TridiagonalSystem& sys, const SplitDecomposition& split);

}  // namespace tdpair
