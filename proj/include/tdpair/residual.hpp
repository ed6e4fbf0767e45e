#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tdpair/matrix.hpp"
#include "tdpair/scalar.hpp"

namespace tdpair {

/// One evaluated identity: LHS - RHS, reduced to what a report needs.
struct Residual {
  std::string identity;
  std::vector<long> index;
  bool is_zero = true;
  std::size_t norm0 = 0;
  /// (row, col) of the first nonzero entry; (0, 0) for scalar identities.
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

Residual matrix_residual(std::string identity, std::vector<long> index, const Matrix& value);
Residual scalar_residual(std::string identity, std::vector<long> index, const Scalar& value);

inline bool all_zero(const std::vector<Residual>& rs) {
  for (const auto& r : rs)
    if (!r.is_zero) return false;
  return true;
}

struct RankEntry {
  std::string table;
  std::size_t i = 0, j = 0;
  std::size_t rank = 0, expected = 0;

  bool ok() const { return rank == expected; }
};

inline bool all_ok(const std::vector<RankEntry>& table) {
  for (const auto& e : table)
    if (!e.ok()) return false;
  return true;
}

/// rho_i if i + j <= d, else rho_j.
std::size_t closed_form_rank(const std::vector<std::size_t>& shape, std::size_t i, std::size_t j);

}  // namespace tdpair
