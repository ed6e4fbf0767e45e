#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tdpair/scalar.hpp"

namespace tdpair {

/// Dense row-major matrix over a single field. The shape is fixed at
/// construction; entries may be written through at().
class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix.
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  static Matrix diagonal(const std::vector<Scalar>& entries);
  static Matrix from_rows(Field field, const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_ints(Field field, std::initializer_list<std::initializer_list<long>> rows);
  /// Each column of the result is one of the given vectors.
  static Matrix from_columns(Field field, std::size_t rows, const std::vector<std::vector<Scalar>>& columns);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::vector<Scalar> column(std::size_t j) const;
  std::vector<Scalar> row(std::size_t i) const;

  bool is_zero() const;
  std::size_t nonzero_count() const;
  std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;

  Matrix transpose() const;
  Scalar trace() const;
  Matrix pow(unsigned exponent) const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator*(const Scalar& s, Matrix m) { return m *= s; }
  friend Matrix operator*(Matrix m, const Scalar& s) { return m *= s; }
  friend Matrix operator/(Matrix m, const Scalar& s) { return m *= s.inverse(); }
  Matrix operator-() const;

  friend bool operator==(const Matrix& lhs, const Matrix& rhs);
  friend bool operator!=(const Matrix& lhs, const Matrix& rhs) { return !(lhs == rhs); }

  /// Matrix-vector product.
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

 private:
  void check_compatible(const Matrix& rhs, const char* op) const;

  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// [X, Y] = XY - YX
Matrix commutator(const Matrix& x, const Matrix& y);

/// A (x) B
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Columns of lhs followed by the columns of rhs.
Matrix hstack(const Matrix& lhs, const Matrix& rhs);

/// Readable multi-line dump, mostly for diagnostics.
std::string to_string(const Matrix& m);

}  // namespace tdpair
