#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tdpair {

enum class Errc {
  field_mismatch,
  dimension_mismatch,
  division_by_zero,
  parse,
  invalid_argument,
  not_diagonalizable,
  repeated_eigenvalue,
  decomposition,
  not_nilpotent,
  factorial_not_invertible,
  contradiction,
  internal_inconsistency,
  not_leonard,
  type_mismatch,
};

std::string_view to_string(Errc code);

/// Every failure in the library is reported through this exception; the code
/// tells callers which contract was violated.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace tdpair
