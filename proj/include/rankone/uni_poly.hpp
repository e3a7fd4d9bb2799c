#pragma once

#include <climits>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "rankone/scalar.hpp"

namespace rankone {

/// Univariate polynomial over a FieldSpec, coefficients stored in ascending
/// order without trailing zeros. The zero polynomial has no coefficients and
/// degree kMinusInfinity.
class UniPoly {
 public:
  static constexpr int kMinusInfinity = INT_MIN;

  explicit UniPoly(FieldSpec field) : field_(field) {}
  UniPoly(FieldSpec field, std::vector<Scalar> coeffs);
  /// Integer coefficients, ascending.
  UniPoly(FieldSpec field, std::initializer_list<std::int64_t> coeffs);

  static UniPoly constant(const Scalar& c);
  static UniPoly one(FieldSpec field) { return constant(Scalar::one(field)); }
  /// c * s^k
  static UniPoly monomial(const Scalar& c, int k);
  /// The indeterminate s.
  static UniPoly variable(FieldSpec field) { return monomial(Scalar::one(field), 1); }

  [[nodiscard]] const FieldSpec& field() const { return field_; }
  [[nodiscard]] const std::vector<Scalar>& coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  [[nodiscard]] int degree() const {
    return coeffs_.empty() ? kMinusInfinity : static_cast<int>(coeffs_.size()) - 1;
  }
  /// Coefficient of s^k (zero past the degree).
  [[nodiscard]] Scalar coeff(std::size_t k) const;
  [[nodiscard]] Scalar leading() const;
  [[nodiscard]] bool is_monic() const { return !is_zero() && leading().is_one(); }
  /// Multiplicity of 0 as a root; 0 for the zero polynomial.
  [[nodiscard]] int valuation() const;

  [[nodiscard]] UniPoly monic() const;
  [[nodiscard]] UniPoly derivative() const;
  [[nodiscard]] Scalar evaluate(const Scalar& x) const;
  [[nodiscard]] UniPoly scaled(const Scalar& c) const;
  /// f(s) -> s^k f(s)
  [[nodiscard]] UniPoly shifted(int k) const;
  /// Largest coefficient height; 0 over prime fields.
  [[nodiscard]] std::size_t height() const;

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator-(const UniPoly& a);

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  /// "s^2 + 2*s + 1" style rendering.
  [[nodiscard]] std::string to_string(char var = 's') const;

 private:
  void trim();
  void require_same_field(const UniPoly& rhs) const;

  FieldSpec field_;
  std::vector<Scalar> coeffs_;
};

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
[[nodiscard]] std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
[[nodiscard]] UniPoly operator/(const UniPoly& a, const UniPoly& b);  // exact quotient part
[[nodiscard]] UniPoly operator%(const UniPoly& a, const UniPoly& b);
[[nodiscard]] bool divides(const UniPoly& d, const UniPoly& f);
/// Quotient f/d; throws NotDivisible when d does not divide f.
[[nodiscard]] UniPoly exact_quotient(const UniPoly& f, const UniPoly& d);

/// Monic gcd; gcd(0, 0) = 0.
[[nodiscard]] UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// Monic lcm; lcm with a zero argument is 0.
[[nodiscard]] UniPoly lcm(const UniPoly& a, const UniPoly& b);
[[nodiscard]] std::pair<UniPoly, UniPoly> gcd_lcm(const UniPoly& a, const UniPoly& b);

/// base^e mod m.
[[nodiscard]] UniPoly powmod(UniPoly base, std::uint64_t e, const UniPoly& m);

}  // namespace rankone
