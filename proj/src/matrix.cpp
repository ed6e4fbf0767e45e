#include "tdpair/matrix.hpp"

#include <sstream>

#include "tdpair/error.hpp"

namespace tdpair {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& entries) {
  if (entries.empty()) throw Error(Errc::invalid_argument, "diagonal needs at least one entry");
  Matrix m(entries.front().field(), entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(Errc::dimension_mismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j].field() != field) throw Error(Errc::field_mismatch, "matrix entry from another field");
      m.at(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_ints(Field field, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Scalar>> entries;
  for (const auto& row : rows) {
    auto& out = entries.emplace_back();
    for (long v : row) out.emplace_back(field, v);
  }
  return from_rows(field, entries);
}

Matrix Matrix::from_columns(Field field, std::size_t rows, const std::vector<std::vector<Scalar>>& columns) {
  Matrix m(field, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error(Errc::dimension_mismatch, "column length");
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = columns[j][i];
  }
  return m;
}

std::vector<Scalar> Matrix::column(std::size_t j) const {
  std::vector<Scalar> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

bool Matrix::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

std::size_t Matrix::nonzero_count() const {
  std::size_t count = 0;
  for (const auto& s : data_) count += s.is_zero() ? 0 : 1;
  return count;
}

std::optional<std::pair<std::size_t, std::size_t>> Matrix::first_nonzero() const {
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!data_[k].is_zero()) return std::make_pair(k / cols_, k % cols_);
  }
  return std::nullopt;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = (*this)(i, j);
  return t;
}

Scalar Matrix::trace() const {
  if (!is_square()) throw Error(Errc::dimension_mismatch, "trace of a non-square matrix");
  Scalar sum = Scalar::zero(field_);
  for (std::size_t i = 0; i < rows_; ++i) sum += (*this)(i, i);
  return sum;
}

Matrix Matrix::pow(unsigned exponent) const {
  if (!is_square()) throw Error(Errc::dimension_mismatch, "power of a non-square matrix");
  Matrix result = identity(field_, rows_);
  for (unsigned k = 0; k < exponent; ++k) result = result * *this;
  return result;
}

void Matrix::check_compatible(const Matrix& rhs, const char* op) const {
  if (field_ != rhs.field_) throw Error(Errc::field_mismatch, std::string("matrix ") + op);
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw Error(Errc::dimension_mismatch, std::string("matrix ") + op);
  }
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  check_compatible(rhs, "sum");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  check_compatible(rhs, "difference");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  if (s.field() != field_) throw Error(Errc::field_mismatch, "scalar multiple");
  for (auto& entry : data_) entry *= s;
  return *this;
}

Matrix Matrix::operator-() const {
  Matrix out(*this);
  for (auto& entry : out.data_) entry = -entry;
  return out;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.field_ != rhs.field_) throw Error(Errc::field_mismatch, "matrix product");
  if (lhs.cols_ != rhs.rows_) throw Error(Errc::dimension_mismatch, "matrix product");
  Matrix out(lhs.field_, lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Scalar& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Scalar& b = rhs(k, j);
        if (!b.is_zero()) out.at(i, j) += a * b;
      }
    }
  }
  return out;
}

bool operator==(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.field_ != rhs.field_ || lhs.rows_ != rhs.rows_ || lhs.cols_ != rhs.cols_) return false;
  for (std::size_t k = 0; k < lhs.data_.size(); ++k) {
    if (lhs.data_[k] != rhs.data_[k]) return false;
  }
  return true;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != cols_) throw Error(Errc::dimension_mismatch, "matrix-vector product");
  std::vector<Scalar> out(rows_, Scalar::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw Error(Errc::field_mismatch, "kronecker product");
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out.at(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

Matrix hstack(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.field() != rhs.field()) throw Error(Errc::field_mismatch, "hstack");
  if (lhs.rows() != rhs.rows()) throw Error(Errc::dimension_mismatch, "hstack");
  Matrix out(lhs.field(), lhs.rows(), lhs.cols() + rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < lhs.cols(); ++j) out.at(i, j) = lhs(i, j);
    for (std::size_t j = 0; j < rhs.cols(); ++j) out.at(i, lhs.cols() + j) = rhs(i, j);
  }
  return out;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os.str();
}

}  // namespace tdpair
