#pragma once

#include "rankone/invariants.hpp"

namespace rankone {

/// Whether some row h(s) makes [h(s); H1(s)] strictly equivalent to H(s),
/// given inner = invariants of H1 ((n+p) x (n+m), rank n) and outer =
/// invariants of H ((n+p+1) x (n+m), rank n). Conditions: outer has at least
/// as many positive row indices as inner, pi_i | pi1_i | pi_{i+1},
/// u <' w on the row indices, and equal column indices.
/// A shape or rank relation other than the one above yields false.
/// Throws FieldMismatch for records over different fields and
/// InconsistentInvariants for a record that fails validate().
[[nodiscard]] bool row_completion_same_rank_exists(const KroneckerInvariants& inner, const KroneckerInvariants& outer);

/// Same question when the added row raises the rank: outer has rank n + 1.
/// Conditions: pi_i | pi1_i | pi_{i+1}, g <' c on the column indices, and
/// equal row indices.
[[nodiscard]] bool row_completion_rank_up_exists(const KroneckerInvariants& inner, const KroneckerInvariants& outer);

/// Either of the two row predicates, chosen by the rank relation.
[[nodiscard]] bool row_completion_exists(const KroneckerInvariants& inner, const KroneckerInvariants& outer);

/// Column versions: [h(s) H1(s)], decided on the transposed records.
[[nodiscard]] bool column_completion_same_rank_exists(const KroneckerInvariants& inner,
                                                      const KroneckerInvariants& outer);
[[nodiscard]] bool column_completion_rank_up_exists(const KroneckerInvariants& inner,
                                                    const KroneckerInvariants& outer);
[[nodiscard]] bool column_completion_exists(const KroneckerInvariants& inner, const KroneckerInvariants& outer);

}  // namespace rankone
