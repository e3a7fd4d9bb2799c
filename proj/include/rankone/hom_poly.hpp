#pragma once

#include <string>
#include <vector>

#include "rankone/uni_poly.hpp"

namespace rankone {

/// Homogeneous polynomial in (s, t) stored as t^k * t^deg(f) * f(s/t) with a
/// monic finite part f. Since f is monic, t never divides the homogenization
/// of f, so the encoding (k, f) is unique. The zero polynomial is a separate
/// state; it is divisible by everything and divides only itself.
class HomPoly {
 public:
  /// The unit 1.
  explicit HomPoly(FieldSpec field) : t_exp_(0), finite_(UniPoly::one(field)) {}
  /// t^t_exp * hom(finite); `finite` is made monic. Throws std::invalid_argument
  /// when finite is zero (use zero()) or t_exp < 0.
  HomPoly(int t_exp, const UniPoly& finite);

  static HomPoly zero(FieldSpec field);
  static HomPoly one(FieldSpec field) { return HomPoly(field); }
  /// Homogenization of a nonzero univariate polynomial (t_exp 0).
  static HomPoly homogenize(const UniPoly& f) { return HomPoly(0, f); }

  [[nodiscard]] const FieldSpec& field() const { return finite_.field(); }
  [[nodiscard]] bool is_zero() const { return zero_; }
  [[nodiscard]] bool is_one() const { return !zero_ && t_exp_ == 0 && finite_.is_one(); }
  [[nodiscard]] int t_exp() const { return t_exp_; }
  [[nodiscard]] const UniPoly& finite() const { return finite_; }
  /// Total degree t_exp + deg(finite). Throws std::domain_error for zero.
  [[nodiscard]] int degree() const;

  friend bool operator==(const HomPoly& a, const HomPoly& b) {
    if (a.zero_ || b.zero_) return a.zero_ == b.zero_ && a.field() == b.field();
    return a.t_exp_ == b.t_exp_ && a.finite_ == b.finite_;
  }

  /// Bivariate rendering such as "t*s^2 + t^2*s".
  [[nodiscard]] std::string to_string() const;

 private:
  struct ZeroTag {};
  HomPoly(ZeroTag, FieldSpec field) : zero_(true), t_exp_(0), finite_(UniPoly::one(field)) {}

  bool zero_ = false;
  int t_exp_;
  UniPoly finite_;
};

[[nodiscard]] bool divides(const HomPoly& a, const HomPoly& b);
[[nodiscard]] HomPoly gcd(const HomPoly& a, const HomPoly& b);
[[nodiscard]] HomPoly lcm(const HomPoly& a, const HomPoly& b);
[[nodiscard]] HomPoly operator*(const HomPoly& a, const HomPoly& b);
/// a / b; throws NotDivisible unless b | a, and for 0/0.
[[nodiscard]] HomPoly quotient(const HomPoly& a, const HomPoly& b);

/// Chain element with the out-of-range conventions: 1 below index 1 and 0
/// above the chain length (indices are 1-based).
[[nodiscard]] HomPoly chain_at(const std::vector<HomPoly>& chain, int i, const FieldSpec& field);

}  // namespace rankone
