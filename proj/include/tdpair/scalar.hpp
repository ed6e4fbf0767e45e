#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tdpair {

/// The ground field: either the rationals or GF(p) for a prime p < 2^31.
/// Constructions that divide by 2 (everything past basic linear algebra)
/// additionally require p to be odd.
class Field {
 public:
  Field() = default;

  static Field rational() { return Field(); }
  static Field prime(std::uint64_t p);

  /// Accepts "rational" or "prime:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const noexcept { return modulus_ == 0; }
  /// 0 for the rationals.
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t characteristic() const noexcept { return modulus_; }

  std::string to_string() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : modulus_(p) {}

  std::uint64_t modulus_ = 0;
};

/// An exact field element. Rationals are kept reduced with a positive
/// denominator; residues live in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(Field field, long value);
  Scalar(Field field, const mpq_class& value);

  static Scalar zero(Field field) { return Scalar(field, 0L); }
  static Scalar one(Field field) { return Scalar(field, 1L); }

  /// Integers "n" and fractions "n/d" (d > 0). In GF(p) a fraction is read as
  /// n * d^{-1}.
  static Scalar parse(Field field, std::string_view text);

  const Field& field() const noexcept { return field_; }

  bool is_zero() const;
  bool is_one() const;

  /// Canonical text: "n" or "n/d" over Q, the residue in [0, p) over GF(p).
  std::string to_string() const;

  /// Exact rational value; throws type_mismatch over GF(p).
  const mpq_class& rational() const;
  /// Residue in [0, p); throws type_mismatch over Q.
  std::uint64_t residue() const;

  Scalar inverse() const;
  Scalar pow(unsigned exponent) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& lhs, const Scalar& rhs);
  friend bool operator!=(const Scalar& lhs, const Scalar& rhs) { return !(lhs == rhs); }

  /// Total order used only to make outputs deterministic (numeric order over
  /// Q, residue order over GF(p)).
  friend bool canonical_less(const Scalar& lhs, const Scalar& rhs);

 private:
  void check_same_field(const Scalar& rhs) const;

  Field field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace tdpair
