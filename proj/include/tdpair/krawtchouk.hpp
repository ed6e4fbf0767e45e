#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tdpair/leonard.hpp"
#include "tdpair/residual.hpp"
#include "tdpair/rfl.hpp"
#include "tdpair/split.hpp"
#include "tdpair/system.hpp"

namespace tdpair {

struct KrawtchoukParams {
  std::size_t d = 0;
  Scalar p;
};

/// theta_i = thetastar_i = d - 2i.
bool is_krawtchouk_type(const TridiagonalSystem& sys);

/// d - 2i for i = 0..d.
std::vector<Scalar> krawtchouk_eigenvalues(Field field, std::size_t d);

/// b_i = 2p(d-i), c_i = 2(1-p)i, a_i = (1-2p)(d-2i), x_i = 4p(1-p)i(d-i+1),
/// phi_i = 4pi(i-d-1).
LeonardData krawtchouk_closed_forms(const KrawtchoukParams& params);

/// The tridiagonal pair in the E*_i xi basis: A tridiagonal from (c, a, b),
/// A* = diag(d - 2i). Requires p not in {0, 1} and characteristic 0 or an odd
/// prime above d.
std::pair<Matrix, Matrix> krawtchouk_pair(const KrawtchoukParams& params);

/// Builds, verifies and derives the Leonard data, which must agree with the
/// closed forms.
std::pair<TridiagonalSystem, LeonardData> construct_krawtchouk(const KrawtchoukParams& params);

/// Dolan/Grady relations, the commutator formulas for R, F, L, the bracket
/// relations, the exponential identities and the ad-nilpotency of the split
/// maps. Throws type_mismatch unless the system has Krawtchouk type.
std::vector<Residual> check_section12(const TridiagonalSystem& sys, const RFLDecomposition& rfl,
                                      const SplitDecomposition& split);

struct KroneckerOutcome {
  PairVerdict verdict;
  /// One entry per system found: whether the whole check suite passed.
  std::vector<bool> suite_passed;
  std::vector<std::vector<std::size_t>> shapes;
};

/// A1 (x) I + I (x) A2 against A1* (x) I + I (x) A2*, run through the
/// verifier and, for any system found, the full check suite.
KroneckerOutcome kronecker_sum_candidate(const TridiagonalSystem& s1, const TridiagonalSystem& s2);

}  // namespace tdpair
