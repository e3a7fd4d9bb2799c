#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "rankone/errors.hpp"

namespace rankone {

/// The ground field: a prime field GF(p) or the rationals.
///
/// Equality is structural. Operations never coerce between fields; mixing two
/// different FieldSpecs raises FieldMismatch.
class FieldSpec {
 public:
  enum class Kind : std::uint8_t { prime, rational };

  /// Throws InvalidField unless 2 <= p < 2^31 and p is prime.
  static FieldSpec prime(std::uint64_t p);
  static FieldSpec rational() { return FieldSpec(Kind::rational, 0); }

  [[nodiscard]] Kind kind() const { return kind_; }
  [[nodiscard]] bool is_prime() const { return kind_ == Kind::prime; }
  [[nodiscard]] bool is_rational() const { return kind_ == Kind::rational; }
  /// Modulus for prime fields, 0 for the rationals.
  [[nodiscard]] std::uint32_t modulus() const { return p_; }

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

[[nodiscard]] bool is_prime_number(std::uint64_t n);

/// Field element in canonical form: an integer in [0, p) for GF(p), a reduced
/// fraction with positive denominator for the rationals.
class Scalar {
 public:
  /// The zero of `field`.
  explicit Scalar(FieldSpec field);
  /// Integer `v` mapped into `field` (reduced mod p for prime fields).
  Scalar(FieldSpec field, std::int64_t v);
  /// Integer from an arbitrary-precision value.
  Scalar(FieldSpec field, const mpz_class& v);
  /// num/den; throws DivisionByZero when den == 0.
  Scalar(FieldSpec field, const mpz_class& num, const mpz_class& den);

  static Scalar zero(FieldSpec field) { return Scalar(field); }
  static Scalar one(FieldSpec field) { return Scalar(field, 1); }

  [[nodiscard]] const FieldSpec& field() const { return field_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_one() const;

  /// Residue for prime fields. Precondition: field().is_prime().
  [[nodiscard]] std::uint32_t residue() const { return std::get<std::uint32_t>(value_); }
  /// Rational value. Precondition: field().is_rational().
  [[nodiscard]] const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  [[nodiscard]] Scalar inverse() const;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a);

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Size measure used for pivot selection: 0 for prime fields, bit length of
  /// |num| + bit length of den for rationals.
  [[nodiscard]] std::size_t height() const;

  /// "3" for GF(p) elements and integral rationals, "num/den" otherwise.
  [[nodiscard]] std::string to_string() const;

  [[nodiscard]] std::size_t hash() const;

 private:
  void require_same_field(const Scalar& rhs) const;

  FieldSpec field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Number of elements of the field, or 0 for the (infinite) rationals.
[[nodiscard]] std::uint64_t field_size(const FieldSpec& field);

/// Binary arithmetic entry point mirroring the operator set.
enum class ArithOp : std::uint8_t { add, sub, mul, div, inv, neg };
[[nodiscard]] Scalar arith(ArithOp op, const Scalar& a, const Scalar* b = nullptr);

}  // namespace rankone
