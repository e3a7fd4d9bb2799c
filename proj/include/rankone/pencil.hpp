#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rankone/matrix.hpp"
#include "rankone/scalar.hpp"
#include "rankone/uni_poly.hpp"

namespace rankone {

using ScalarMatrix = Matrix<Scalar>;
using PolyMatrix = Matrix<UniPoly>;

[[nodiscard]] ScalarMatrix zero_matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);
[[nodiscard]] ScalarMatrix identity_matrix(const FieldSpec& field, std::size_t n);
[[nodiscard]] ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b);
/// Rank over the field: plain elimination over GF(p), fraction-free (Bareiss)
/// elimination on the cleared-denominator integer matrix over Q.
[[nodiscard]] std::size_t rank(const ScalarMatrix& m);

/// Matrix pencil A0 + s*A1 with constant p x q coefficient matrices.
class Pencil {
 public:
  /// Zero pencil.
  Pencil(FieldSpec field, std::size_t rows, std::size_t cols);
  /// Throws DimensionMismatch or FieldMismatch on inconsistent inputs.
  Pencil(FieldSpec field, ScalarMatrix a0, ScalarMatrix a1);

  /// Integer entries, row by row; both matrices must be rows x cols.
  static Pencil from_ints(FieldSpec field, const std::vector<std::vector<std::int64_t>>& a0,
                          const std::vector<std::vector<std::int64_t>>& a1);
  /// Entries of degree <= 1; throws std::invalid_argument otherwise.
  static Pencil from_polys(FieldSpec field, const std::vector<std::vector<UniPoly>>& entries);

  [[nodiscard]] const FieldSpec& field() const { return field_; }
  [[nodiscard]] std::size_t rows() const { return a0_.rows(); }
  [[nodiscard]] std::size_t cols() const { return a0_.cols(); }
  [[nodiscard]] const ScalarMatrix& a0() const { return a0_; }
  [[nodiscard]] const ScalarMatrix& a1() const { return a1_; }

  /// a0(i,j) + s*a1(i,j)
  [[nodiscard]] UniPoly entry(std::size_t i, std::size_t j) const;
  [[nodiscard]] PolyMatrix to_poly_matrix() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] Pencil transposed() const;
  /// A1 + t*A0, returned as a pencil in the same indeterminate.
  [[nodiscard]] Pencil dual() const;
  /// Q * P * R for constant matrices of matching sizes.
  [[nodiscard]] Pencil transformed(const ScalarMatrix& q, const ScalarMatrix& r) const;

  friend Pencil operator+(const Pencil& a, const Pencil& b);
  friend Pencil operator-(const Pencil& a, const Pencil& b);
  friend bool operator==(const Pencil& a, const Pencil& b) {
    return a.field_ == b.field_ && a.a0_ == b.a0_ && a.a1_ == b.a1_;
  }

  [[nodiscard]] std::string to_string() const;

 private:
  FieldSpec field_;
  ScalarMatrix a0_;
  ScalarMatrix a1_;
};

/// Base-p digit encoding of a pencil over GF(p): A0 entries row-major, then A1.
/// Throws UnsupportedField for Q and ShapeTooLarge if p^(2pq) overflows 64 bits.
[[nodiscard]] std::uint64_t encode_pencil(const Pencil& p);
[[nodiscard]] Pencil decode_pencil(const FieldSpec& field, std::size_t rows, std::size_t cols, std::uint64_t code);
/// p^(2*rows*cols), or throws ShapeTooLarge on overflow.
[[nodiscard]] std::uint64_t pencil_count(const FieldSpec& field, std::size_t rows, std::size_t cols);

}  // namespace rankone
