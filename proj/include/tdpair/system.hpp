#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tdpair/matrix.hpp"
#include "tdpair/scalar.hpp"

namespace tdpair {

/// (A; E_0..E_d; A*; E*_0..E*_d) with the eigenvalue sequences and shape.
struct TridiagonalSystem {
  std::size_t d = 0;
  Matrix A, Astar;
  std::vector<Matrix> E, Estar;
  std::vector<Scalar> theta, thetastar;
  std::vector<std::size_t> shape;

  const Field& field() const { return A.field(); }
  std::size_t dim() const { return A.rows(); }
};

enum class PairFailure {
  none,
  not_diagonalizable,
  diameter_mismatch,
  reducible,
  no_standard_ordering,
  irreducibility_undetermined,
};

std::string_view to_string(PairFailure failure);

struct PairVerdict {
  std::vector<TridiagonalSystem> systems;
  PairFailure failure = PairFailure::none;
  std::string detail;
  /// Dimension of the unital algebra generated by A and A*.
  std::size_t algebra_dim = 0;

  bool ok() const { return failure == PairFailure::none; }
};

/// Every tridiagonal system with the given pair of operators: four of them
/// (two standard orderings on each side), or one when d = 0. Throws on
/// malformed input (non-square, size or field mismatch).
PairVerdict verify_pair(const Matrix& A, const Matrix& Astar);

/// Dimension of the span of all words in a and b (the empty word included).
std::size_t generated_algebra_dimension(const Matrix& a, const Matrix& b);

/// Builds the system for the given eigenvalue orderings and checks the
/// block-tridiagonal axioms. Irreducibility is the caller's business.
/// Throws contradiction if an axiom fails.
TridiagonalSystem make_system(const Matrix& A, const std::vector<Scalar>& theta, const Matrix& Astar,
                              const std::vector<Scalar>& thetastar);

/// Out of verified systems, the one whose eigenvalue sequences are exactly
/// the given ones.
std::optional<TridiagonalSystem> select_system(const std::vector<TridiagonalSystem>& systems,
                                               const std::vector<Scalar>& theta,
                                               const std::vector<Scalar>& thetastar);

/// rho_i = rank E_i, cross-checked against E_{d-i}, E*_i, E*_{d-i} and
/// unimodality. Throws internal_inconsistency on disagreement.
std::vector<std::size_t> compute_shape(const TridiagonalSystem& sys);

struct RelationParameters {
  Scalar beta, gamma, gammastar, rho, rhostar;
  Scalar theta_m1, theta_dp1, thetastar_m1, thetastar_dp1;
};

/// beta is forced when d >= 3 (a given value must agree). For d <= 2 it
/// defaults to 2. With d = 1, gamma is fixed by the convention
/// gamma = (2 - beta)(theta_0 + theta_1)/2, and d = 0 treats theta_1 as
/// theta_0. Throws contradiction when the sequences admit no parameters.
RelationParameters compute_relation_parameters(const TridiagonalSystem& sys,
                                               std::optional<Scalar> beta = std::nullopt);

/// theta_i for -1 <= i <= d+1, reading the extended values at the ends.
Scalar extended_theta(const TridiagonalSystem& sys, const RelationParameters& params, long i);
Scalar extended_thetastar(const TridiagonalSystem& sys, const RelationParameters& params, long i);

/// LHS - RHS of both expanded tridiagonal relations.
std::pair<Matrix, Matrix> check_tridiagonal_relations(const TridiagonalSystem& sys,
                                                      const RelationParameters& params);

enum class Relative { star, down, downdown, times };

std::string_view to_string(Relative which);

/// star: (A*; E*; A; E). down: (A; E; A*; E*_{d-l}).
/// downdown: (A; E_{d-l}; A*; E*). times: (A*; E*_{d-l}; A; E_{d-l}).
TridiagonalSystem relatives(const TridiagonalSystem& sys, Relative which);

}  // namespace tdpair
