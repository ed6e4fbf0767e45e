#pragma once

#include <optional>
#include <vector>

#include "tdpair/matrix.hpp"
#include "tdpair/residual.hpp"
#include "tdpair/system.hpp"

namespace tdpair {

/// A = R + F + L relative to the E*-eigenspaces.
struct RFLDecomposition {
  Matrix R, F, L;
};

/// Throws internal_inconsistency if a defining property fails.
RFLDecomposition compute_rfl(const TridiagonalSystem& sys);

/// Indexed by i in 0..d; entries outside each coefficient's range are
/// empty, and so are the two indeterminates e+_d and e-_1.
struct SectionFiveCoefficients {
  std::vector<std::optional<Scalar>> gplus, gminus, eplus, eminus;
};

SectionFiveCoefficients section5_coefficients(const TridiagonalSystem& sys, const RelationParameters& params);

/// Relations among R, F, L obtained from the tridiagonal relations, each
/// right-multiplied by the E*_i on which it is meant to hold. Throws
/// internal_inconsistency if an indeterminate multiplies a nonzero term.
std::vector<Residual> check_section5(const TridiagonalSystem& sys, const RelationParameters& params,
                                     const RFLDecomposition& rfl);

/// Rank tables for 0 <= i <= j <= d: R^{j-i}E*_i, L^{j-i}E*_j,
/// E*_i A^{j-i} E*_j, E*_j A^{j-i} E*_i, E_i A*^{j-i} E_j, E_j A*^{j-i} E_i.
std::vector<RankEntry> check_section10(const TridiagonalSystem& sys, const RFLDecomposition& rfl);

}  // namespace tdpair
