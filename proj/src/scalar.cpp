#include "tdpair/scalar.hpp"

#include <ostream>

#include "tdpair/error.hpp"

namespace tdpair {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::field_mismatch: return "field-mismatch";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::division_by_zero: return "division-by-zero";
    case Errc::parse: return "parse";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::not_diagonalizable: return "not-diagonalizable";
    case Errc::repeated_eigenvalue: return "repeated-eigenvalue";
    case Errc::decomposition: return "decomposition";
    case Errc::not_nilpotent: return "not-nilpotent";
    case Errc::factorial_not_invertible: return "factorial-not-invertible";
    case Errc::contradiction: return "contradiction";
    case Errc::internal_inconsistency: return "internal-inconsistency";
    case Errc::not_leonard: return "not-leonard";
    case Errc::type_mismatch: return "type-mismatch";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t k = 2; k * k <= p; ++k) {
    if (p % k == 0) return false;
  }
  return true;
}

std::uint64_t reduce(const mpz_class& value, std::uint64_t p) {
  mpz_class r = value % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

bool is_integer_literal(std::string_view text, bool allow_sign) {
  if (text.empty()) return false;
  std::size_t start = 0;
  if (allow_sign && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text) {
  std::string digits(text);
  if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31U) || !is_prime(p)) {
    throw Error(Errc::invalid_argument,
                "field modulus must be a prime below 2^31, got " + std::to_string(p));
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "rational") return rational();
  constexpr std::string_view prefix = "prime:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    if (!is_integer_literal(digits, false) || digits.size() > 12) {
      throw Error(Errc::parse, "bad field modulus '" + std::string(digits) + "'");
    }
    return prime(std::stoull(std::string(digits)));
  }
  throw Error(Errc::parse, "unknown field '" + std::string(text) + "'");
}

std::string Field::to_string() const {
  return is_rational() ? std::string("rational") : "prime:" + std::to_string(modulus_);
}

Scalar::Scalar(Field field, long value) : field_(field) {
  if (field_.is_rational()) {
    q_ = value;
  } else {
    r_ = reduce(mpz_class(value), field_.modulus());
  }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (field_.is_rational()) {
    q_ = value;
    q_.canonicalize();
    return;
  }
  const std::uint64_t p = field_.modulus();
  const std::uint64_t den = reduce(value.get_den(), p);
  if (den == 0) throw Error(Errc::division_by_zero, "denominator vanishes mod " + std::to_string(p));
  r_ = reduce(value.get_num(), p) * pow_mod(den, p - 2, p) % p;
}

Scalar Scalar::parse(Field field, std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text, true)) {
      throw Error(Errc::parse, "not a scalar: '" + std::string(text) + "'");
    }
    return Scalar(field, mpq_class(parse_integer(text)));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num, true) || !is_integer_literal(den, false)) {
    throw Error(Errc::parse, "not a scalar: '" + std::string(text) + "'");
  }
  const mpz_class d = parse_integer(den);
  if (d == 0) throw Error(Errc::parse, "zero denominator in '" + std::string(text) + "'");
  return Scalar(field, mpq_class(parse_integer(num), d));
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw Error(Errc::type_mismatch, "scalar is not rational");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw Error(Errc::type_mismatch, "scalar is not a residue");
  return r_;
}

void Scalar::check_same_field(const Scalar& rhs) const {
  if (field_ != rhs.field_) {
    throw Error(Errc::field_mismatch, field_.to_string() + " vs " + rhs.field_.to_string());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::division_by_zero, "inverse of zero");
  Scalar out(*this);
  if (field_.is_rational()) {
    out.q_ = 1 / q_;
    out.q_.canonicalize();
  } else {
    out.r_ = pow_mod(r_, field_.modulus() - 2, field_.modulus());
  }
  return out;
}

Scalar Scalar::pow(unsigned exponent) const {
  Scalar result = one(field_);
  for (unsigned k = 0; k < exponent; ++k) result *= *this;
  return result;
}

Scalar Scalar::operator-() const {
  Scalar out(*this);
  if (field_.is_rational()) {
    out.q_ = -q_;
  } else {
    out.r_ = r_ == 0 ? 0 : field_.modulus() - r_;
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same_field(rhs);
  if (field_.is_rational()) {
    q_ += rhs.q_;
  } else {
    r_ = (r_ + rhs.r_) % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same_field(rhs);
  if (field_.is_rational()) {
    q_ -= rhs.q_;
  } else {
    r_ = (r_ + field_.modulus() - rhs.r_) % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same_field(rhs);
  if (field_.is_rational()) {
    q_ *= rhs.q_;
  } else {
    r_ = r_ * rhs.r_ % field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same_field(rhs);
  return *this *= rhs.inverse();
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  lhs.check_same_field(rhs);
  return lhs.field_.is_rational() ? lhs.q_ == rhs.q_ : lhs.r_ == rhs.r_;
}

bool canonical_less(const Scalar& lhs, const Scalar& rhs) {
  lhs.check_same_field(rhs);
  return lhs.field_.is_rational() ? lhs.q_ < rhs.q_ : lhs.r_ < rhs.r_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace tdpair
