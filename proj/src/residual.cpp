#include "tdpair/residual.hpp"

namespace tdpair {

Residual matrix_residual(std::string identity, std::vector<long> index, const Matrix& value) {
  Residual r;
  r.identity = std::move(identity);
  r.index = std::move(index);
  r.norm0 = value.nonzero_count();
  r.is_zero = r.norm0 == 0;
  if (!r.is_zero) r.counterexample = value.first_nonzero();
  return r;
}

Residual scalar_residual(std::string identity, std::vector<long> index, const Scalar& value) {
  Residual r;
  r.identity = std::move(identity);
  r.index = std::move(index);
  r.is_zero = value.is_zero();
  r.norm0 = r.is_zero ? 0 : 1;
  if (!r.is_zero) r.counterexample = std::make_pair(std::size_t{0}, std::size_t{0});
  return r;
}

std::size_t closed_form_rank(const std::vector<std::size_t>& shape, std::size_t i, std::size_t j) {
  const std::size_t d = shape.size() - 1;
  return i + j <= d ? shape[i] : shape[j];
}

}  // namespace tdpair
