#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rankone/invariants.hpp"
#include "rankone/majorize.hpp"

namespace rankone {

/// Which Kronecker block a rank-one pencil carries (exactly one, since the
/// degree sum equals 1): a finite eigenvalue, an infinite one, L_1 or L_1^T.
enum class RankOneClass : std::uint8_t { finite_eigenvalue, infinite_eigenvalue, column_index, row_index };

/// P(s) = left(s) * right(s)^T with at least one constant side.
struct RankOneForm {
  enum class Kind : std::uint8_t { const_left, const_right };
  Kind kind = Kind::const_left;
  RankOneClass source = RankOneClass::infinite_eigenvalue;
  std::vector<UniPoly> left;   // p entries, constant when kind == const_left
  std::vector<UniPoly> right;  // q entries, constant when kind == const_right

  /// The outer product as a pencil.
  [[nodiscard]] Pencil product(const FieldSpec& field) const;
};

[[nodiscard]] RankOneClass rank_one_class(const KroneckerInvariants& inv);

/// Factorization of a normal-rank-one pencil. Finite-eigenvalue and row-index
/// pencils get a constant right factor, the other two a constant left factor;
/// the constant side is scaled so its first nonzero entry is 1.
/// Throws NotRankOne otherwise.
[[nodiscard]] RankOneForm decompose_rank_one(const Pencil& p);

/// psi_{i-1} | phi_i | psi_{i+1} for 1 <= i <= n (chains padded by 1 below
/// index 1 and 0 past their length).
[[nodiscard]] bool interlacing_ok(const std::vector<HomPoly>& phi, const std::vector<HomPoly>& psi, int n);

/// All values of sum_i deg pi_i over chains with
/// lcm(phi_i, psi_i) | pi_i | gcd(phi_{i+1}, psi_{i+1}), 1 <= i <= n, in
/// increasing order; nullopt when no such chain exists. Throws UnboundedChain
/// when some gcd(phi_{i+1}, psi_{i+1}) is zero (both chains end at i).
[[nodiscard]] std::optional<std::vector<std::int64_t>> pi_chain_degree_sums(const std::vector<HomPoly>& phi,
                                                                            const std::vector<HomPoly>& psi, int n,
                                                                            std::uint64_t seed = 0);

/// sum deg lcm(phi_i, psi_i) <= x <= sum deg gcd(phi_{i+1}, psi_{i+1}) (a zero
/// gcd leaves the upper side open). Exact over algebraically closed fields,
/// necessary over any field.
[[nodiscard]] bool closed_field_interval_ok(const std::vector<HomPoly>& phi, const std::vector<HomPoly>& psi, int n,
                                            std::int64_t x);

/// Which criterion certified a verdict. `equivalent` covers strictly
/// equivalent inputs; case4a..case4d are the four majorization/target
/// combinations of the unequal-indices case.
enum class Route : std::uint8_t { equivalent, case1, case2, case3, case4a, case4b, case4c, case4d, none };

[[nodiscard]] std::string to_string(Route r);

/// Quantities the verdict was read from. Fields not used by the dispatched
/// case stay empty.
struct Evidence {
  int dispatched_case = 0;  // 0: equivalent inputs; 1..4: the four index cases
  int n = 0;                // min of the two ranks
  std::optional<bool> interlacing;
  std::optional<LastDifference> difference;
  std::optional<std::int64_t> G, T, G_bar, T_bar;
  std::optional<std::int64_t> lower_bound;  // sum min + max{c_f, d_f'} (or barred)
  std::optional<std::int64_t> upper_bound;  // sum max - max{c_f, d_f'} (or barred)
  std::optional<bool> chain_exists;
  std::optional<std::vector<std::int64_t>> degree_sums;
  std::optional<std::int64_t> target;
  std::string detail;
};

struct DecisionOutcome {
  bool exists = false;
  Route route = Route::none;
  Evidence evidence;
};

/// Decision for inequivalent pencils from their invariants alone.
/// Throws SameInvariants for equal records, ShapeMismatch for different
/// shapes and FieldMismatch for different fields.
[[nodiscard]] DecisionOutcome theorem_decide(const KroneckerInvariants& a, const KroneckerInvariants& b,
                                             std::uint64_t seed = 0);

/// Full decision from invariants: equal records are settled directly (1 x 1
/// needs B != 0 and at least three field elements, a zero pencil never works,
/// anything else always works); otherwise theorem_decide.
[[nodiscard]] DecisionOutcome decide_invariants(const KroneckerInvariants& a, const KroneckerInvariants& b,
                                                std::uint64_t seed = 0);

/// Whether a rank-one P with A + P strictly equivalent to B exists.
/// Throws ShapeMismatch or FieldMismatch.
[[nodiscard]] DecisionOutcome decide(const Pencil& a, const Pencil& b, std::uint64_t seed = 0);

}  // namespace rankone
