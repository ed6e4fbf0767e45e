#include "tdpair/linalg.hpp"

#include <algorithm>
#include <optional>

#include "tdpair/error.hpp"

namespace tdpair {

// ---------------------------------------------------------------------------
// Elimination

RowEchelon row_echelon(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(row, j));
    }
    const Scalar inv = a(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const Scalar factor = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) {
        if (!a(row, j).is_zero()) a.at(i, j) -= factor * a(row, j);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_echelon(m).pivots.size(); }

// ---------------------------------------------------------------------------
// Subspaces

Subspace::Subspace(Field field, std::size_t ambient)
    : field_(field), ambient_(ambient), basis_(field, ambient, 0) {}

Subspace Subspace::span(const Matrix& columns) {
  const auto ech = row_echelon(columns.transpose());
  Subspace s(columns.field(), columns.rows());
  Matrix basis(columns.field(), columns.rows(), ech.pivots.size());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r)
    for (std::size_t i = 0; i < columns.rows(); ++i) basis.at(i, r) = ech.reduced(r, i);
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::whole(Field field, std::size_t ambient) {
  return span(Matrix::identity(field, ambient));
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  if (v.size() != ambient_) throw Error(Errc::dimension_mismatch, "vector length vs ambient");
  return rank(hstack(basis_, Matrix::from_columns(field_, ambient_, {v}))) == dim();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_ || other.field_ != field_) {
    throw Error(Errc::dimension_mismatch, "subspaces of different ambient spaces");
  }
  return rank(hstack(basis_, other.basis_)) == dim();
}

RankKernel rank_kernel(const Matrix& m) {
  const auto ech = row_echelon(m);
  const Field f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::vector<Scalar>> kernel;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), Scalar::zero(f));
    v[free] = Scalar::one(f);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
    kernel.push_back(std::move(v));
  }
  return {ech.pivots.size(), Subspace::span(Matrix::from_columns(f, m.cols(), kernel))};
}

Subspace image(const Matrix& m) { return Subspace::span(m); }

namespace {

void check_same_ambient(const Subspace& lhs, const Subspace& rhs) {
  if (lhs.ambient() != rhs.ambient()) {
    throw Error(Errc::dimension_mismatch, "subspaces of different ambient dimension");
  }
  if (lhs.field() != rhs.field()) throw Error(Errc::field_mismatch, "subspaces over different fields");
}

}  // namespace

Subspace subspace_intersect(const Subspace& lhs, const Subspace& rhs) {
  check_same_ambient(lhs, rhs);
  if (lhs.dim() == 0 || rhs.dim() == 0) return Subspace(lhs.field(), lhs.ambient());
  // Joint membership: lhs.basis * x = rhs.basis * y.
  const Matrix joint = hstack(lhs.basis(), -rhs.basis());
  const auto kernel = rank_kernel(joint).kernel;
  Matrix coords(lhs.field(), lhs.dim(), kernel.dim());
  for (std::size_t k = 0; k < kernel.dim(); ++k)
    for (std::size_t i = 0; i < lhs.dim(); ++i) coords.at(i, k) = kernel.basis()(i, k);
  return Subspace::span(lhs.basis() * coords);
}

Subspace subspace_sum(const Subspace& lhs, const Subspace& rhs) {
  check_same_ambient(lhs, rhs);
  return Subspace::span(hstack(lhs.basis(), rhs.basis()));
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::dimension_mismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const auto ech = row_echelon(hstack(m, Matrix::identity(m.field(), n)));
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) {
    throw Error(Errc::division_by_zero, "matrix is singular");
  }
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = ech.reduced(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial (Hessenberg reduction, then the usual recurrence)

std::vector<Scalar> characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::dimension_mismatch, "characteristic polynomial");
  const Field f = m.field();
  const std::size_t n = m.rows();
  Matrix h = m;
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t sel = j + 1;
    while (sel < n && h(sel, j).is_zero()) ++sel;
    if (sel == n) continue;
    if (sel != j + 1) {
      for (std::size_t k = 0; k < n; ++k) std::swap(h.at(sel, k), h.at(j + 1, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(h.at(k, sel), h.at(k, j + 1));
    }
    const Scalar pivot = h(j + 1, j);
    for (std::size_t i = j + 2; i < n; ++i) {
      if (h(i, j).is_zero()) continue;
      const Scalar u = h(i, j) / pivot;
      for (std::size_t k = 0; k < n; ++k) h.at(i, k) -= u * h(j + 1, k);
      for (std::size_t k = 0; k < n; ++k) h.at(k, j + 1) += u * h(k, i);
    }
  }
  // p[k] = characteristic polynomial of the leading k x k block.
  std::vector<std::vector<Scalar>> p(n + 1);
  p[0] = {Scalar::one(f)};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Scalar> next(k + 1, Scalar::zero(f));
    const Scalar& diag = h(k - 1, k - 1);
    for (std::size_t c = 0; c < k; ++c) {
      next[c + 1] += p[k - 1][c];
      next[c] -= diag * p[k - 1][c];
    }
    Scalar sub_product = Scalar::one(f);
    for (std::size_t i = k - 1; i-- > 0;) {
      sub_product *= h(i + 1, i);
      if (sub_product.is_zero()) break;
      const Scalar coeff = h(i, k - 1) * sub_product;
      for (std::size_t c = 0; c < p[i].size(); ++c) next[c] -= coeff * p[i][c];
    }
    p[k] = std::move(next);
  }
  return p[n];
}

// ---------------------------------------------------------------------------
// Eigenvalues lying in the field

namespace {

std::vector<mpz_class> divisors(mpz_class value) {
  value = abs(value);
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (mpz_class p = 2; p * p <= value; ++p) {
    unsigned e = 0;
    while (mpz_divisible_p(value.get_mpz_t(), p.get_mpz_t())) {
      value /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  }
  if (value > 1) factors.emplace_back(value, 1);
  std::vector<mpz_class> out{1};
  for (const auto& [p, e] : factors) {
    const std::size_t existing = out.size();
    mpz_class power = 1;
    for (unsigned k = 0; k < e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * power);
    }
  }
  return out;
}

// Primitive integer polynomial with the same roots as a rational one.
std::vector<mpz_class> to_primitive(const std::vector<mpq_class>& poly) {
  mpz_class lcm = 1;
  for (const auto& c : poly) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> out;
  mpz_class content = 0;
  for (const auto& c : poly) {
    mpz_class v = c.get_num() * (lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (content > 1) {
    for (auto& v : out) v /= content;
  }
  return out;
}

mpq_class evaluate(const std::vector<mpz_class>& poly, const mpq_class& x) {
  mpq_class acc = 0;
  for (std::size_t k = poly.size(); k-- > 0;) acc = acc * x + mpq_class(poly[k]);
  return acc;
}

// Divides by (x - root), returning the rational quotient.
std::vector<mpq_class> deflate(const std::vector<mpz_class>& poly, const mpq_class& root) {
  const std::size_t n = poly.size() - 1;
  std::vector<mpq_class> quotient(n);
  mpq_class carry = 0;
  for (std::size_t k = n; k-- > 0;) {
    carry = carry * root + mpq_class(poly[k + 1]);
    quotient[k] = carry;
  }
  return quotient;
}

std::vector<mpq_class> rational_roots(std::vector<mpq_class> poly) {
  std::vector<mpq_class> roots;
  while (poly.size() > 1) {
    auto ints = to_primitive(poly);
    if (ints.front() == 0) {
      roots.emplace_back(0);
      poly.assign(poly.begin() + 1, poly.end());
      continue;
    }
    const mpz_class lead = ints.back();
    // Cauchy bound on the absolute value of any root.
    mpq_class bound = 0;
    for (std::size_t k = 0; k + 1 < ints.size(); ++k) {
      mpq_class ratio(abs(ints[k]), abs(lead));
      ratio.canonicalize();
      bound = std::max(bound, ratio);
    }
    bound += 1;
    std::optional<mpq_class> found;
    const auto nums = divisors(ints.front());
    const auto dens = divisors(lead);
    for (const auto& num : nums) {
      for (const auto& den : dens) {
        mpq_class candidate(num, den);
        candidate.canonicalize();
        if (candidate > bound) continue;
        for (const mpq_class& c : {candidate, mpq_class(-candidate)}) {
          if (evaluate(ints, c) == 0) {
            found = c;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
    roots.push_back(*found);
    poly = deflate(ints, *found);
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

Scalar horner(const std::vector<Scalar>& poly, const Scalar& x) {
  Scalar acc = Scalar::zero(x.field());
  for (std::size_t k = poly.size(); k-- > 0;) acc = acc * x + poly[k];
  return acc;
}

}  // namespace

EigenDecomposition eigenvalues_in_field(const Matrix& m) {
  if (!m.is_square()) throw Error(Errc::dimension_mismatch, "eigenvalues of a non-square matrix");
  const Field f = m.field();
  const std::size_t n = m.rows();
  const auto poly = characteristic_polynomial(m);
  std::vector<Scalar> values;
  if (f.is_rational()) {
    std::vector<mpq_class> q;
    for (const auto& c : poly) q.push_back(c.rational());
    for (const auto& r : rational_roots(q)) values.emplace_back(f, r);
  } else {
    for (std::uint64_t r = 0; r < f.modulus(); ++r) {
      Scalar x(f, static_cast<long>(r));
      if (horner(poly, x).is_zero()) values.push_back(x);
      if (values.size() == n) break;
    }
  }
  EigenDecomposition out;
  std::size_t total = 0;
  for (const auto& value : values) {
    auto space = rank_kernel(m - value * Matrix::identity(f, n)).kernel;
    total += space.dim();
    out.pairs.push_back({value, std::move(space)});
  }
  out.diagonalizable = (total == n);
  return out;
}

// ---------------------------------------------------------------------------
// Idempotents and projectors

std::vector<Matrix> lagrange_idempotents(const Matrix& m, const std::vector<Scalar>& thetas) {
  if (!m.is_square()) throw Error(Errc::dimension_mismatch, "idempotents of a non-square matrix");
  if (thetas.empty()) throw Error(Errc::invalid_argument, "no eigenvalues supplied");
  const Field f = m.field();
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < thetas.size(); ++i)
    for (std::size_t j = i + 1; j < thetas.size(); ++j)
      if (thetas[i] == thetas[j]) {
        throw Error(Errc::repeated_eigenvalue, "eigenvalue " + thetas[i].to_string() + " repeated");
      }
  const Matrix id = Matrix::identity(f, n);
  std::vector<Matrix> idempotents;
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    Matrix e = id;
    for (std::size_t j = 0; j < thetas.size(); ++j) {
      if (j == i) continue;
      e = e * ((m - thetas[j] * id) / (thetas[i] - thetas[j]));
    }
    idempotents.push_back(std::move(e));
  }
  Matrix sum(f, n, n);
  Matrix weighted(f, n, n);
  for (std::size_t i = 0; i < idempotents.size(); ++i) {
    if (idempotents[i].is_zero()) {
      throw Error(Errc::not_diagonalizable, thetas[i].to_string() + " is not an eigenvalue");
    }
    for (std::size_t j = 0; j < idempotents.size(); ++j) {
      const Matrix prod = idempotents[i] * idempotents[j];
      if (i == j ? prod != idempotents[i] : !prod.is_zero()) {
        throw Error(Errc::not_diagonalizable, "idempotent relations fail");
      }
    }
    sum += idempotents[i];
    weighted += thetas[i] * idempotents[i];
  }
  if (sum != id || weighted != m) {
    throw Error(Errc::not_diagonalizable, "matrix is not diagonalizable with the given eigenvalues");
  }
  return idempotents;
}

std::vector<Matrix> projectors_from_direct_sum(const std::vector<Subspace>& parts) {
  if (parts.empty()) throw Error(Errc::invalid_argument, "no summands");
  const Field f = parts.front().field();
  const std::size_t n = parts.front().ambient();
  Matrix basis(f, n, 0);
  for (const auto& part : parts) {
    if (part.ambient() != n || part.field() != f) {
      throw Error(Errc::dimension_mismatch, "summands of different ambient spaces");
    }
    basis = hstack(basis, part.basis());
  }
  if (basis.cols() != n || rank(basis) != n) {
    throw Error(Errc::decomposition, "the sum of the parts is not a direct sum equal to the whole space");
  }
  const Matrix inv = inverse(basis);
  std::vector<Matrix> projectors;
  std::size_t offset = 0;
  for (const auto& part : parts) {
    Matrix coords(f, part.dim(), n);
    for (std::size_t r = 0; r < part.dim(); ++r)
      for (std::size_t j = 0; j < n; ++j) coords.at(r, j) = inv(offset + r, j);
    projectors.push_back(part.basis() * coords);
    offset += part.dim();
  }
  return projectors;
}

// ---------------------------------------------------------------------------
// Nilpotent exponential

std::size_t nilpotency_index(const Matrix& n) {
  if (!n.is_square()) throw Error(Errc::dimension_mismatch, "nilpotency of a non-square matrix");
  Matrix power = Matrix::identity(n.field(), n.rows());
  for (std::size_t k = 0; k <= n.rows(); ++k) {
    if (power.is_zero()) return k;
    power = power * n;
  }
  throw Error(Errc::not_nilpotent, "matrix is not nilpotent");
}

Matrix nilpotent_exp_scaled(const Matrix& n, const Scalar& c) {
  const std::size_t index = nilpotency_index(n);
  const Field f = n.field();
  if (!f.is_rational() && index > 0 && index - 1 >= f.modulus()) {
    throw Error(Errc::factorial_not_invertible,
                std::to_string(index - 1) + "! vanishes in " + f.to_string());
  }
  const Matrix scaled = c * n;
  Matrix term = Matrix::identity(f, n.rows());
  Matrix sum = term;
  for (std::size_t k = 1; k < index; ++k) {
    term = (term * scaled) / Scalar(f, static_cast<long>(k));
    sum += term;
  }
  return sum;
}

}  // namespace tdpair
