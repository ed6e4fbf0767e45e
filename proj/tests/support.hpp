#pragma once

#include <random>
#include <string>
#include <vector>

#include "tdpair/krawtchouk.hpp"
#include "tdpair/matrix.hpp"

namespace tdpair::testing {

inline Scalar q(long num, long den = 1) {
  return Scalar(Field::rational(), mpq_class(num, den));
}

inline Scalar s(Field f, const std::string& text) { return Scalar::parse(f, text); }

inline Matrix ints(std::initializer_list<std::initializer_list<long>> rows,
                   Field f = Field::rational()) {
  return Matrix::from_ints(f, rows);
}

/// Small random integer matrix with entries in [lo, hi].
inline Matrix random_matrix(std::mt19937& rng, Field f, std::size_t rows, std::size_t cols,
                            long lo = -3, long hi = 3) {
  std::uniform_int_distribution<long> dist(lo, hi);
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Scalar(f, dist(rng));
  return m;
}

/// Random matrix of rank at most r (product of n x r and r x m factors).
inline Matrix random_low_rank(std::mt19937& rng, Field f, std::size_t rows, std::size_t cols,
                              std::size_t r) {
  return random_matrix(rng, f, rows, r) * random_matrix(rng, f, r, cols);
}

inline std::vector<Scalar> seq(std::initializer_list<long> entries, Field f = Field::rational()) {
  std::vector<Scalar> out;
  for (long e : entries) out.emplace_back(f, e);
  return out;
}

inline TridiagonalSystem krawtchouk(std::size_t d, const Scalar& p) { return construct_krawtchouk({d, p}).first; }

/// A Leonard system with theta_i = thetastar_i = 2^i, d = 3. The first split
/// sequence comes from the parameter-array formula with the second split
/// sequence starting at 1; verify_pair is what accepts it.
inline std::pair<TridiagonalSystem, LeonardData> geometric_leonard() {
  return construct_leonard({q(1), q(2), q(4), q(8)}, {q(1), q(2), q(4), q(8)}, {q(-6), q(-117, 7), q(-27)});
}

}  // namespace tdpair::testing
