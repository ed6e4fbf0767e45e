#pragma once

#include <cstddef>
#include <vector>

#include "tdpair/residual.hpp"
#include "tdpair/rfl.hpp"
#include "tdpair/split.hpp"
#include "tdpair/system.hpp"

namespace tdpair {

/// (th_j - th_i)(th_j - th_{i+1})...(th_j - th_{j-1}); 1 when i = j.
Scalar descent_denominator(const std::vector<Scalar>& th, std::size_t i, std::size_t j);

/// (th_i - th_{i+1})(th_i - th_{i+2})...(th_i - th_j); 1 when i = j.
Scalar ascent_denominator(const std::vector<Scalar>& th, std::size_t i, std::size_t j);

/// F_iE*_j and E*_iF_j rewritten through calL, one step and in closed form.
std::vector<Residual> check_descent(const TridiagonalSystem& sys, const SplitDecomposition& split);

/// The operator S_ij multiplying F_jE*_j in the expansion of F_iE*_iAE*_j:
/// the theta_s sum plus the calR sandwich sum over r - s = 1.
Matrix master_operator(const TridiagonalSystem& sys, const SplitDecomposition& split, std::size_t i, std::size_t j);

/// S_ij F_j E*_j.
Matrix master_identity_rhs(const TridiagonalSystem& sys, const SplitDecomposition& split, std::size_t i,
                           std::size_t j);

/// The operators of the three |i - j| <= 1 specializations, boundary forms
/// included: i = j+1, i = j and i = j-1.
Matrix corollary_raise(const TridiagonalSystem& sys, const SplitDecomposition& split, std::size_t j);
Matrix corollary_flat(const TridiagonalSystem& sys, const SplitDecomposition& split, std::size_t j);
Matrix corollary_lower(const TridiagonalSystem& sys, const SplitDecomposition& split, std::size_t j);

/// F_iE*_iAE*_j - S_ij F_jE*_j for every (i, j), with the specialized
/// operators compared against S_ij where |i - j| <= 1.
std::vector<Residual> check_master_identity(const TridiagonalSystem& sys, const SplitDecomposition& split);

/// Psi X E*_j - op Psi E*_j for X in {R, F, L}, and agreement with the
/// matching master-identity residual.
std::vector<Residual> check_diagrams(const TridiagonalSystem& sys, const SplitDecomposition& split,
                                     const RFLDecomposition& rfl);

/// The j - i >= 2 sums on F_jV and their duals on F_iV, and the two cubic
/// relations in calR, calL.
std::vector<Residual> check_section9(const TridiagonalSystem& sys, const SplitDecomposition& split,
                                     const RelationParameters& params);

/// (th_{j-1} - th_{j-2})(ths_{j-1} - ths_{j-2}) - (th_{j-1} - th_j)(ths_{j-1} - ths_j)
Scalar cubic_coefficient(const TridiagonalSystem& sys, std::size_t j);

}  // namespace tdpair
