#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tdpair/residual.hpp"
#include "tdpair/rfl.hpp"
#include "tdpair/split.hpp"
#include "tdpair/system.hpp"

namespace tdpair {

/// Scalars of a Leonard system. Sequences that start at index 1 are stored
/// from position 0: phi[k] is phi_{k+1}, x[k] is x_{k+1}, c[k] is c_{k+1}.
/// a and b start at 0; taustar[i] is taustar_i(thetastar_i).
struct LeonardData {
  std::size_t d = 0;
  std::vector<Scalar> theta, thetastar;
  std::vector<Scalar> phi, a, x, b, c;
  std::vector<Scalar> taustar;

  // 1-based accessors returning 0 outside the stored range, matching the
  // conventions phi_0 = phi_{d+1} = 0, x_0 = x_{d+1} = 0, c_0 = 0, b_d = 0.
  Scalar phi_at(long i) const;
  Scalar x_at(long i) const;
  Scalar b_at(long i) const;
  Scalar c_at(long i) const;
};

/// prod_{k < i} (thetastar_i - thetastar_k); 1 for i = 0.
Scalar taustar_at(const std::vector<Scalar>& thetastar, std::size_t i);

/// Reads a, x, phi off the system and derives b, c. Throws not_leonard if
/// the shape is not all ones, internal_inconsistency if a defining
/// equation fails.
LeonardData derive_leonard_data(const TridiagonalSystem& sys, const SplitDecomposition& split);

/// Split-basis matrices: A lower bidiagonal (theta on the diagonal, 1 below),
/// A* upper bidiagonal (thetastar on the diagonal, phi above).
std::pair<Matrix, Matrix> split_basis_pair(const std::vector<Scalar>& theta, const std::vector<Scalar>& thetastar,
                                           const std::vector<Scalar>& phi);

/// Builds the split-basis pair, verifies it, picks the system with the given
/// eigenvalue orderings. Throws not_leonard if the parameters are
/// inadmissible.
std::pair<TridiagonalSystem, LeonardData> construct_leonard(const std::vector<Scalar>& theta,
                                                            const std::vector<Scalar>& thetastar,
                                                            const std::vector<Scalar>& phi);

struct Representation {
  /// Columns are the basis vectors.
  Matrix basis;
  Matrix A, Astar;
};

struct LeonardRepresentations {
  Representation raising;  // R^i zeta
  Representation split;    // calR^i zeta
  Representation standard; // E*_i xi
};

/// zeta spans E*_0V, xi spans E_0V; each is the canonical basis vector of its
/// line (first nonzero coordinate 1).
LeonardRepresentations change_of_basis_reps(const TridiagonalSystem& sys, const RFLDecomposition& rfl,
                                            const SplitDecomposition& split);

/// The three representations against their expected shapes, and their
/// mutual conjugacy.
std::vector<Residual> check_representations(const TridiagonalSystem& sys, const RFLDecomposition& rfl,
                                            const SplitDecomposition& split, const LeonardData& data);

/// Scalar identities among theta, thetastar, phi, a, x, b, c and the
/// split-map eigen-relations for calR calL and calL calR.
std::vector<Residual> check_section11(const TridiagonalSystem& sys, const SplitDecomposition& split,
                                      const LeonardData& data, const RelationParameters& params);

}  // namespace tdpair
