#pragma once

#include <cstdint>
#include <vector>

#include "rankone/uni_poly.hpp"

namespace rankone {

struct FactorPower {
  UniPoly factor;  // monic irreducible
  int multiplicity;
  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

/// f = unit * prod factor^multiplicity, factors pairwise distinct and sorted by
/// (degree, coefficients).
struct Factorization {
  Scalar unit;
  std::vector<FactorPower> factors;

  [[nodiscard]] UniPoly expand() const;
};

/// Complete factorization into monic irreducibles.
///
/// GF(p): squarefree decomposition, distinct-degree splitting, then
/// Cantor-Zassenhaus equal-degree splitting (trace map in characteristic 2).
/// Q: Yun squarefree decomposition, then Kronecker's interpolation search on
/// the primitive integer part. Deterministic for a fixed seed.
/// Throws std::invalid_argument for the zero polynomial.
[[nodiscard]] Factorization factorize(const UniPoly& f, std::uint64_t seed = 0);

/// Squarefree decomposition of a nonzero polynomial: pairs (g_i, i) with
/// monic squarefree pairwise coprime g_i and f = lc * prod g_i^i.
[[nodiscard]] std::vector<FactorPower> squarefree_decomposition(const UniPoly& f);

/// Degrees of the irreducible factors, repeated by multiplicity.
[[nodiscard]] std::vector<int> irreducible_degrees(const Factorization& fac);

}  // namespace rankone
