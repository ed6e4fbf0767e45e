#include "tdpair/system.hpp"

#include <algorithm>
#include <deque>

#include "tdpair/error.hpp"
#include "tdpair/linalg.hpp"

namespace tdpair {

std::string_view to_string(PairFailure failure) {
  switch (failure) {
    case PairFailure::none: return "ok";
    case PairFailure::not_diagonalizable: return "not diagonalizable";
    case PairFailure::diameter_mismatch: return "diameter mismatch";
    case PairFailure::reducible: return "reducible";
    case PairFailure::no_standard_ordering: return "no standard ordering";
    case PairFailure::irreducibility_undetermined: return "irreducibility undetermined";
  }
  return "unknown";
}

std::string_view to_string(Relative which) {
  switch (which) {
    case Relative::star: return "star";
    case Relative::down: return "down";
    case Relative::downdown: return "downdown";
    case Relative::times: return "times";
  }
  return "unknown";
}

namespace {

// Reduced echelon rows grown one vector at a time.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(Field field) : field_(field) {}

  bool insert(std::vector<Scalar> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar& c = v[pivots_[r]];
      if (c.is_zero()) continue;
      const Scalar factor = c;
      for (std::size_t k = pivots_[r]; k < v.size(); ++k) {
        if (!rows_[r][k].is_zero()) v[k] -= factor * rows_[r][k];
      }
    }
    std::size_t pivot = 0;
    while (pivot < v.size() && v[pivot].is_zero()) ++pivot;
    if (pivot == v.size()) return false;
    const Scalar inv = v[pivot].inverse();
    for (std::size_t k = pivot; k < v.size(); ++k) v[k] *= inv;
    // Keep earlier rows reduced so the pivot columns stay clean.
    for (auto& row : rows_) {
      const Scalar c = row[pivot];
      if (c.is_zero()) continue;
      for (std::size_t k = pivot; k < v.size(); ++k) {
        if (!v[k].is_zero()) row[k] -= c * v[k];
      }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
  }

  std::size_t size() const { return rows_.size(); }

  Matrix as_columns(std::size_t length) const { return Matrix::from_columns(field_, length, rows_); }

 private:
  Field field_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<Scalar> flatten(const Matrix& m) {
  std::vector<Scalar> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

// Smallest subspace containing v and stable under a and b.
Subspace cyclic_subspace(const Matrix& a, const Matrix& b, const std::vector<Scalar>& v) {
  const std::size_t n = a.rows();
  IncrementalBasis basis(a.field());
  std::deque<std::vector<Scalar>> queue{v};
  std::vector<std::vector<Scalar>> kept;
  while (!queue.empty()) {
    auto w = std::move(queue.front());
    queue.pop_front();
    if (!basis.insert(w)) continue;
    if (basis.size() == n) break;
    queue.push_back(a.apply(w));
    queue.push_back(b.apply(w));
  }
  return Subspace::span(basis.as_columns(n));
}

std::vector<std::vector<Scalar>> witness_candidates(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.rows();
  std::vector<std::vector<Scalar>> out;
  const Matrix id = Matrix::identity(a.field(), n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(id.column(k));
  for (const Matrix* m : {&a, &b}) {
    for (const auto& pair : eigenvalues_in_field(*m).pairs) {
      for (std::size_t k = 0; k < pair.space.dim(); ++k) out.push_back(pair.space.basis().column(k));
    }
  }
  return out;
}

// A proper nonzero subspace stable under a and b, searched among cyclic
// subspaces of natural candidates. Transposes give the annihilator side.
std::optional<std::size_t> find_invariant_subspace(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.rows();
  for (const auto& v : witness_candidates(a, b)) {
    const std::size_t k = cyclic_subspace(a, b, v).dim();
    if (k > 0 && k < n) return k;
  }
  const Matrix at = a.transpose(), bt = b.transpose();
  for (const auto& v : witness_candidates(at, bt)) {
    const std::size_t k = cyclic_subspace(at, bt, v).dim();
    if (k > 0 && k < n) return n - k;
  }
  return std::nullopt;
}

// Vertex order along a simple path in the graph with the given adjacency,
// starting from the lower-numbered endpoint; nullopt if it is not a path.
std::optional<std::vector<std::size_t>> path_order(const std::vector<std::vector<bool>>& adj) {
  const std::size_t m = adj.size();
  if (m == 1) return std::vector<std::size_t>{0};
  std::vector<std::size_t> degree(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) degree[i] += (i != j && adj[i][j]) ? 1 : 0;
  std::size_t ends = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (degree[i] == 1) {
      ++ends;
    } else if (degree[i] != 2) {
      return std::nullopt;
    }
  }
  if (ends != 2) return std::nullopt;
  std::size_t start = 0;
  while (degree[start] != 1) ++start;
  std::vector<std::size_t> order{start};
  std::vector<bool> seen(m, false);
  seen[start] = true;
  while (order.size() < m) {
    const std::size_t cur = order.back();
    std::size_t next = m;
    for (std::size_t j = 0; j < m; ++j) {
      if (j != cur && adj[cur][j] && !seen[j]) {
        next = j;
        break;
      }
    }
    if (next == m) return std::nullopt;  // disconnected
    seen[next] = true;
    order.push_back(next);
  }
  return order;
}

// Graph on the eigenvalue indices of one operator: i ~ j iff
// E_i X E_j or E_j X E_i is nonzero.
std::vector<std::vector<bool>> adjacency(const std::vector<Matrix>& idem, const Matrix& x) {
  const std::size_t m = idem.size();
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    const Matrix left = idem[i] * x;
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && !(left * idem[j]).is_zero()) {
        adj[i][j] = true;
        adj[j][i] = true;
      }
    }
  }
  return adj;
}

std::vector<Scalar> permuted(const std::vector<Scalar>& values, const std::vector<std::size_t>& order) {
  std::vector<Scalar> out;
  for (std::size_t k : order) out.push_back(values[k]);
  return out;
}

std::vector<Scalar> eigen_values(const EigenDecomposition& eig) {
  std::vector<Scalar> out;
  for (const auto& pair : eig.pairs) out.push_back(pair.value);
  return out;
}

// Checks E*_i X E*_j = 0 for |i-j| > 1 and != 0 for |i-j| = 1.
bool block_tridiagonal(const std::vector<Matrix>& idem, const Matrix& x) {
  const std::size_t m = idem.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Matrix left = idem[i] * x;
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t gap = i > j ? i - j : j - i;
      if (gap == 0) continue;
      const bool zero = (left * idem[j]).is_zero();
      if (gap == 1 && zero) return false;
      if (gap > 1 && !zero) return false;
    }
  }
  return true;
}

void require_same_shape(const Matrix& A, const Matrix& Astar) {
  if (!A.is_square() || !Astar.is_square()) throw Error(Errc::dimension_mismatch, "operators must be square");
  if (A.rows() != Astar.rows()) throw Error(Errc::dimension_mismatch, "operators differ in size");
  if (A.field() != Astar.field()) throw Error(Errc::field_mismatch, "operators live over different fields");
  if (A.rows() == 0) throw Error(Errc::invalid_argument, "the space must be nonzero");
}

}  // namespace

std::size_t generated_algebra_dimension(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.rows();
  IncrementalBasis basis(a.field());
  std::deque<Matrix> frontier{Matrix::identity(a.field(), n)};
  // Each round of left multiplication either grows the span or stops, so
  // the word length never exceeds n^2.
  const std::size_t cap = 2 * n * n;
  std::size_t length = 0;
  while (!frontier.empty() && basis.size() < n * n && length <= cap) {
    std::deque<Matrix> next;
    for (auto& w : frontier) {
      if (!basis.insert(flatten(w))) continue;
      next.push_back(a * w);
      next.push_back(b * w);
    }
    frontier = std::move(next);
    ++length;
  }
  return basis.size();
}

std::vector<std::size_t> compute_shape(const TridiagonalSystem& sys) {
  const std::size_t d = sys.d;
  std::vector<std::size_t> shape(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    const std::size_t rho = rank(sys.E[i]);
    if (rank(sys.E[d - i]) != rho || rank(sys.Estar[i]) != rho || rank(sys.Estar[d - i]) != rho) {
      throw Error(Errc::internal_inconsistency, "idempotent ranks disagree at index " + std::to_string(i));
    }
    shape[i] = rho;
  }
  for (std::size_t i = 1; 2 * i <= d; ++i) {
    if (shape[i - 1] > shape[i]) {
      throw Error(Errc::internal_inconsistency, "shape is not unimodal at index " + std::to_string(i));
    }
  }
  return shape;
}

TridiagonalSystem make_system(const Matrix& A, const std::vector<Scalar>& theta, const Matrix& Astar,
                              const std::vector<Scalar>& thetastar) {
  require_same_shape(A, Astar);
  if (theta.empty() || theta.size() != thetastar.size()) {
    throw Error(Errc::contradiction, "eigenvalue sequences must be nonempty and of equal length");
  }
  TridiagonalSystem sys;
  sys.d = theta.size() - 1;
  sys.A = A;
  sys.Astar = Astar;
  sys.theta = theta;
  sys.thetastar = thetastar;
  try {
    sys.E = lagrange_idempotents(A, theta);
    sys.Estar = lagrange_idempotents(Astar, thetastar);
  } catch (const Error& e) {
    throw Error(Errc::contradiction, e.what());
  }
  // Idempotents must exhaust the space: sum E_i = I.
  for (const auto* fam : {&sys.E, &sys.Estar}) {
    Matrix sum(A.field(), A.rows(), A.rows());
    for (const auto& e : *fam) {
      if (e.is_zero()) throw Error(Errc::contradiction, "eigenvalue with a zero eigenspace");
      sum += e;
    }
    if (sum != Matrix::identity(A.field(), A.rows())) {
      throw Error(Errc::contradiction, "eigenvalues do not cover the spectrum");
    }
  }
  if (!block_tridiagonal(sys.E, Astar)) throw Error(Errc::contradiction, "A* is not block tridiagonal on E_iV");
  if (!block_tridiagonal(sys.Estar, A)) throw Error(Errc::contradiction, "A is not block tridiagonal on E*_iV");
  try {
    sys.shape = compute_shape(sys);
  } catch (const Error& e) {
    throw Error(Errc::contradiction, e.what());
  }
  return sys;
}

PairVerdict verify_pair(const Matrix& A, const Matrix& Astar) {
  require_same_shape(A, Astar);
  PairVerdict verdict;
  const auto eig = eigenvalues_in_field(A);
  const auto eigstar = eigenvalues_in_field(Astar);
  if (!eig.diagonalizable || !eigstar.diagonalizable) {
    verdict.failure = PairFailure::not_diagonalizable;
    verdict.detail = !eig.diagonalizable ? "A is not diagonalizable over the field"
                                         : "A* is not diagonalizable over the field";
    return verdict;
  }

  const std::size_t n = A.rows();
  verdict.algebra_dim = generated_algebra_dimension(A, Astar);
  const bool certified = verdict.algebra_dim == n * n;
  if (!certified) {
    if (const auto k = find_invariant_subspace(A, Astar)) {
      verdict.failure = PairFailure::reducible;
      verdict.detail = "common invariant subspace of dimension " + std::to_string(*k);
      return verdict;
    }
  }

  const auto thetas = eigen_values(eig);
  const auto thetastars = eigen_values(eigstar);
  const auto E = lagrange_idempotents(A, thetas);
  const auto Estar = lagrange_idempotents(Astar, thetastars);
  const auto order = path_order(adjacency(E, Astar));
  const auto orderstar = path_order(adjacency(Estar, A));
  if (!order || !orderstar) {
    verdict.failure = PairFailure::no_standard_ordering;
    verdict.detail = !order ? "the eigenspaces of A admit no ordering making A* block tridiagonal"
                            : "the eigenspaces of A* admit no ordering making A block tridiagonal";
    return verdict;
  }
  if (thetas.size() != thetastars.size()) {
    verdict.failure = PairFailure::diameter_mismatch;
    verdict.detail = "A has " + std::to_string(thetas.size()) + " eigenvalues, A* has " +
                     std::to_string(thetastars.size());
    return verdict;
  }
  if (!certified) {
    verdict.failure = PairFailure::irreducibility_undetermined;
    verdict.detail = "generated algebra has dimension " + std::to_string(verdict.algebra_dim) + " < " +
                     std::to_string(n * n) + " but no invariant subspace was found";
    return verdict;
  }

  const auto forward = permuted(thetas, *order);
  const auto forwardstar = permuted(thetastars, *orderstar);
  std::vector<std::vector<Scalar>> choices{forward}, choicesstar{forwardstar};
  if (forward.size() > 1) {
    choices.emplace_back(forward.rbegin(), forward.rend());
    choicesstar.emplace_back(forwardstar.rbegin(), forwardstar.rend());
  }
  for (const auto& th : choices) {
    for (const auto& ths : choicesstar) verdict.systems.push_back(make_system(A, th, Astar, ths));
  }
  return verdict;
}

std::optional<TridiagonalSystem> select_system(const std::vector<TridiagonalSystem>& systems,
                                               const std::vector<Scalar>& theta,
                                               const std::vector<Scalar>& thetastar) {
  for (const auto& sys : systems) {
    if (sys.theta == theta && sys.thetastar == thetastar) return sys;
  }
  return std::nullopt;
}

namespace {

struct SequenceParameters {
  Scalar gamma, rho, before, after;
};

// beta + 1 from four consecutive eigenvalues starting at k.
Scalar beta_at(const std::vector<Scalar>& th, std::size_t k) {
  return (th[k] - th[k + 3]) / (th[k + 1] - th[k + 2]) - Scalar::one(th[k].field());
}

SequenceParameters sequence_parameters(const std::vector<Scalar>& th, const Scalar& beta, const char* name) {
  const Field f = beta.field();
  const std::size_t d = th.size() - 1;
  const Scalar two(f, 2L);
  SequenceParameters out;
  if (d == 0) {
    out.gamma = (two - beta) * th[0];
  } else if (d == 1) {
    out.gamma = (two - beta) * (th[0] + th[1]) / two;
  } else {
    out.gamma = th[0] - beta * th[1] + th[2];
    for (std::size_t i = 2; i + 1 <= d; ++i) {
      if (th[i - 1] - beta * th[i] + th[i + 1] != out.gamma) {
        throw Error(Errc::contradiction, std::string("gamma differs along ") + name);
      }
    }
  }
  auto rho_at = [&](const Scalar& prev, const Scalar& cur) {
    return prev * prev - beta * prev * cur + cur * cur - out.gamma * (prev + cur);
  };
  if (d == 0) {
    out.rho = rho_at(th[0], th[0]);
    out.before = th[0];
    out.after = th[0];
    return out;
  }
  out.rho = rho_at(th[0], th[1]);
  for (std::size_t i = 2; i <= d; ++i) {
    if (rho_at(th[i - 1], th[i]) != out.rho) {
      throw Error(Errc::contradiction, std::string("rho differs along ") + name);
    }
  }
  out.before = out.gamma + beta * th[0] - th[1];
  out.after = out.gamma + beta * th[d] - th[d - 1];
  return out;
}

}  // namespace

RelationParameters compute_relation_parameters(const TridiagonalSystem& sys, std::optional<Scalar> beta) {
  const Field f = sys.field();
  const std::size_t d = sys.d;
  if (!f.is_rational() && f.modulus() == 2) {
    throw Error(Errc::invalid_argument, "relation parameters need characteristic other than 2");
  }
  Scalar b = beta.value_or(Scalar(f, 2L));
  if (d >= 3) {
    const Scalar forced = beta_at(sys.theta, 0);
    for (std::size_t k = 0; k + 3 <= d; ++k) {
      if (beta_at(sys.theta, k) != forced || beta_at(sys.thetastar, k) != forced) {
        throw Error(Errc::contradiction, "beta is not constant along the eigenvalue sequences");
      }
    }
    if (beta && *beta != forced) {
      throw Error(Errc::invalid_argument, "beta is forced to " + forced.to_string() + " when d >= 3");
    }
    b = forced;
  }
  const auto p = sequence_parameters(sys.theta, b, "theta");
  const auto ps = sequence_parameters(sys.thetastar, b, "thetastar");
  return RelationParameters{b, p.gamma, ps.gamma, p.rho, ps.rho, p.before, p.after, ps.before, ps.after};
}

Scalar extended_theta(const TridiagonalSystem& sys, const RelationParameters& params, long i) {
  if (i == -1) return params.theta_m1;
  if (i == static_cast<long>(sys.d) + 1) return params.theta_dp1;
  if (i < -1 || i > static_cast<long>(sys.d) + 1) throw Error(Errc::invalid_argument, "index out of range");
  return sys.theta[static_cast<std::size_t>(i)];
}

Scalar extended_thetastar(const TridiagonalSystem& sys, const RelationParameters& params, long i) {
  if (i == -1) return params.thetastar_m1;
  if (i == static_cast<long>(sys.d) + 1) return params.thetastar_dp1;
  if (i < -1 || i > static_cast<long>(sys.d) + 1) throw Error(Errc::invalid_argument, "index out of range");
  return sys.thetastar[static_cast<std::size_t>(i)];
}

namespace {

// X^3 Y - (b+1) X^2 Y X + (b+1) X Y X^2 - Y X^3 - g (X^2 Y - Y X^2) - r (X Y - Y X)
Matrix relation_residual(const Matrix& x, const Matrix& y, const Scalar& beta, const Scalar& gamma,
                         const Scalar& rho) {
  const Scalar b1 = beta + Scalar::one(beta.field());
  const Matrix x2 = x * x;
  const Matrix x3 = x2 * x;
  const Matrix lhs = x3 * y - b1 * (x2 * y * x) + b1 * (x * y * x2) - y * x3;
  const Matrix rhs = gamma * (x2 * y - y * x2) + rho * (x * y - y * x);
  return lhs - rhs;
}

std::vector<Matrix> reversed(const std::vector<Matrix>& v) { return {v.rbegin(), v.rend()}; }
std::vector<Scalar> reversed(const std::vector<Scalar>& v) { return {v.rbegin(), v.rend()}; }

}  // namespace

std::pair<Matrix, Matrix> check_tridiagonal_relations(const TridiagonalSystem& sys,
                                                      const RelationParameters& params) {
  return {relation_residual(sys.A, sys.Astar, params.beta, params.gamma, params.rho),
          relation_residual(sys.Astar, sys.A, params.beta, params.gammastar, params.rhostar)};
}

TridiagonalSystem relatives(const TridiagonalSystem& sys, Relative which) {
  TridiagonalSystem out = sys;
  switch (which) {
    case Relative::star:
      std::swap(out.A, out.Astar);
      std::swap(out.E, out.Estar);
      std::swap(out.theta, out.thetastar);
      break;
    case Relative::down:
      out.Estar = reversed(sys.Estar);
      out.thetastar = reversed(sys.thetastar);
      break;
    case Relative::downdown:
      out.E = reversed(sys.E);
      out.theta = reversed(sys.theta);
      break;
    case Relative::times:
      out.A = sys.Astar;
      out.Astar = sys.A;
      out.E = reversed(sys.Estar);
      out.Estar = reversed(sys.E);
      out.theta = reversed(sys.thetastar);
      out.thetastar = reversed(sys.theta);
      break;
  }
  if (!block_tridiagonal(out.E, out.Astar) || !block_tridiagonal(out.Estar, out.A)) {
    throw Error(Errc::internal_inconsistency, "relative lost the tridiagonal property");
  }
  out.shape = compute_shape(out);
  return out;
}

}  // namespace tdpair
