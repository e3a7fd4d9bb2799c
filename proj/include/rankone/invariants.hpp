#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rankone/hom_poly.hpp"
#include "rankone/partition.hpp"
#include "rankone/pencil.hpp"

namespace rankone {

/// Complete system of strict-equivalence invariants of a p x q pencil of
/// normal rank n: the homogeneous invariant factors Gamma_1 | ... | Gamma_n,
/// column minimal indices (q - n of them) and row minimal indices (p - n).
struct KroneckerInvariants {
  FieldSpec field = FieldSpec::rational();
  int rows = 0;
  int cols = 0;
  int rank = 0;
  std::vector<HomPoly> hif;
  Partition col_min;
  Partition row_min;

  /// Same homogeneous invariant factors, minimal indices swapped.
  [[nodiscard]] KroneckerInvariants transposed() const;
  /// Sum of degrees of the homogeneous invariant factors.
  [[nodiscard]] int hif_degree() const;
  /// Throws InconsistentInvariants unless lengths match the shape, hif is a
  /// divisibility chain of nonzero polynomials and the degree-sum identity
  /// sum deg Gamma_i + sum col_min + sum row_min = rank holds.
  void validate() const;
  /// Compact canonical text; equal keys <=> equal records (same field).
  [[nodiscard]] std::string key() const;

  friend bool operator==(const KroneckerInvariants&, const KroneckerInvariants&) = default;
};

enum class SmithVariable : std::uint8_t { s, dual };
enum class Side : std::uint8_t { column, row };

/// Invariant factors of a polynomial matrix: diagonal of its Smith form,
/// monic, as a divisibility chain whose length is the normal rank.
/// Pivots on a minimal-degree entry; over Q ties go to the smallest height.
[[nodiscard]] std::vector<UniPoly> smith_chain(PolyMatrix m);

/// variable = s: invariant factors of A0 + s A1. variable = dual: invariant
/// factors of A1 + t A0 (the t-power content gives the infinite elementary
/// divisors).
[[nodiscard]] std::vector<UniPoly> smith_invariant_factors(const Pencil& p, SmithVariable variable);

[[nodiscard]] int normal_rank(const Pencil& p);

/// Column (or row) minimal indices. With nu_k the nullity of the convolution
/// map v(s) -> (A0 + s A1) v(s) on vectors of degree <= k,
/// #{i : c_i <= k} = nu_k - nu_{k-1}.
[[nodiscard]] Partition minimal_indices(const Pencil& p, Side side);

[[nodiscard]] KroneckerInvariants kronecker_invariants(const Pencil& p);

/// Throws FieldMismatch for pencils over different fields.
[[nodiscard]] bool strictly_equivalent(const Pencil& a, const Pencil& b);

/// Kronecker canonical pencil: companion blocks sI - C(gamma) for the finite
/// parts, blocks sN + I for the t-powers, L_eps per column index and L_eta^T
/// per row index. Throws InconsistentInvariants when validate() fails.
[[nodiscard]] Pencil realize(const KroneckerInvariants& inv);

/// Q P R with random invertible Q, R drawn from `seed` (entries uniform over
/// GF(p), integers in [-3, 3] over Q).
[[nodiscard]] Pencil random_equivalent(const Pencil& p, std::uint64_t seed);
[[nodiscard]] ScalarMatrix random_invertible(const FieldSpec& field, std::size_t n, std::uint64_t seed);

}  // namespace rankone
