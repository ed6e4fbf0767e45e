#pragma once

#include <cstddef>
#include <vector>

#include "tdpair/matrix.hpp"
#include "tdpair/scalar.hpp"

namespace tdpair {

/// A subspace of F^n held as the column space of a basis matrix. The basis is
/// kept in reduced column echelon form (pivots scaled to 1), so equal
/// subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of F^ambient.
  Subspace(Field field, std::size_t ambient);

  /// Column space of the given matrix.
  static Subspace span(const Matrix& columns);
  static Subspace whole(Field field, std::size_t ambient);

  const Field& field() const noexcept { return field_; }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.cols(); }
  /// ambient x dim, columns independent and canonical.
  const Matrix& basis() const noexcept { return basis_; }

  bool contains(const std::vector<Scalar>& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& lhs, const Subspace& rhs) {
    return lhs.ambient_ == rhs.ambient_ && lhs.basis_ == rhs.basis_;
  }

 private:
  Field field_;
  std::size_t ambient_ = 0;
  Matrix basis_;
};

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination.
RowEchelon row_echelon(const Matrix& m);

std::size_t rank(const Matrix& m);

struct RankKernel {
  std::size_t rank = 0;
  Subspace kernel;
};

RankKernel rank_kernel(const Matrix& m);

Subspace image(const Matrix& m);
Subspace subspace_intersect(const Subspace& lhs, const Subspace& rhs);
Subspace subspace_sum(const Subspace& lhs, const Subspace& rhs);

/// Throws division_by_zero if m is singular.
Matrix inverse(const Matrix& m);

/// Coefficients c_0..c_n of det(xI - M), monic.
std::vector<Scalar> characteristic_polynomial(const Matrix& m);

struct Eigenpair {
  Scalar value;
  Subspace space;
};

struct EigenDecomposition {
  /// Eigenvalues lying in the base field, in canonical order.
  std::vector<Eigenpair> pairs;
  /// Eigenspaces span the whole space.
  bool diagonalizable = false;
};

EigenDecomposition eigenvalues_in_field(const Matrix& m);

/// E_i = prod_{j != i} (M - theta_j I) / (theta_i - theta_j). The standard
/// idempotent facts are verified before returning.
std::vector<Matrix> lagrange_idempotents(const Matrix& m, const std::vector<Scalar>& thetas);

/// Projections onto each part along the sum of the others.
std::vector<Matrix> projectors_from_direct_sum(const std::vector<Subspace>& parts);

/// Nilpotency index of n (smallest k with n^k = 0); throws not_nilpotent.
std::size_t nilpotency_index(const Matrix& n);

/// exp(cN) as the finite sum over k < index of (cN)^k / k!.
Matrix nilpotent_exp_scaled(const Matrix& n, const Scalar& c);

}  // namespace tdpair
