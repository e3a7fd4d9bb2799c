#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "rankone/errors.hpp"
#include "rankone/partition.hpp"

namespace rankone {

/// Generalized majorization g < (d, a) for nonincreasing integer sequences of
/// lengths m + s, m and s:
///   d_i >= g_{i+s} (1 <= i <= m),
///   sum_{i<=h_j} g_i - sum_{i<=h_j-j} d_i <= sum_{i<=j} a_i with
///   h_j = min{i : d_{i-j+1} < g_i} (1 <= j <= s),
///   sum g = sum d + sum a.
/// Throws LengthMismatch on inconsistent lengths, InvalidPartition when a
/// sequence increases.
[[nodiscard]] bool gen_majorized(std::span<const std::int64_t> g, std::span<const std::int64_t> d,
                                 std::span<const std::int64_t> a);

/// One-step generalized majorization g <' d with len(g) = len(d) + 1: with
/// h = min{i : d_i < g_i}, d_i = g_{i+1} for h <= i <= len(d).
[[nodiscard]] bool one_step_majorized(const Partition& g, const Partition& d);

/// Partition of length len(a) + 1, summing to S, one-step majorized by a.
/// Follows the Euclidean-division construction: choose the smallest k with
/// S >= sum_{j>k} a_j + (k+1) a_k, write S - sum_{j>=k} a_j = k q + r and
/// take r entries q+1, k-r entries q, then the tail a_k, ..., a_m.
/// Throws std::invalid_argument for S < 0.
[[nodiscard]] Partition build_g_with_sum(std::int64_t S, const Partition& a);

/// Partition e of length len(a) - 1 summing to E with a <' e, or nullopt when
/// none exists. Feasible iff E = sum_{i>=2} a_i or E >= a_1 + sum_{i>=3} a_i,
/// except that a single-part a only admits E = 0 (e is then empty).
/// Throws std::invalid_argument for an empty a or E < 0.
[[nodiscard]] std::optional<Partition> build_e_with_sum(std::int64_t E, const Partition& a);

struct LastDifference {
  int ell;      // max{i : c_i != d_i}
  int f;        // max{i <= ell : c_i < d_{i-1}}, d_0 = +inf
  int f_prime;  // max{i <= ell : d_i < c_{i-1}}, c_0 = +inf
};

/// Throws EqualPartitions when c == d and LengthMismatch for unequal lengths.
[[nodiscard]] LastDifference ell_f_fprime(const Partition& c, const Partition& d);

/// sum_i min{c_i, d_i} + max{c_f, d_f'}: the largest S admitting a common
/// one-step minorant.
[[nodiscard]] std::int64_t simultaneous_g_bound(const Partition& c, const Partition& d);

/// Partition g of length m + 1 summing to S with g <' c and g <' d, or nullopt
/// when S exceeds simultaneous_g_bound. The witness is the constructive one:
/// a truncated prefix of min{c_i, d_i}, or that prefix followed by
/// build_g_with_sum on the tail of the partition that is smaller at index ell.
[[nodiscard]] std::optional<Partition> simultaneous_g(std::int64_t S, const Partition& c, const Partition& d);

/// Whether a partition e of length m - 1 with sum E, c <' e and d <' e exists.
/// f > 1 and f' > 1: E >= sum max{c_i, d_i} - max{c_f, d_f'}.
/// Otherwise: E = sum_{i>=2} max{c_i, d_i} or E >= max{c_1, d_1} + sum_{i>=3} max{c_i, d_i}.
/// A single-part pair only admits E = 0.
[[nodiscard]] bool simultaneous_e_exists(std::int64_t E, const Partition& c, const Partition& d);

/// The weaker inequality form E >= sum max{c_i, d_i} - max{c_f, d_f'}, valid
/// as a necessary condition for every f, f'.
[[nodiscard]] bool simultaneous_e_inequality(std::int64_t E, const Partition& c, const Partition& d);

/// #{i : a_i > 0} >= #{i : e_i > 0} whenever a <' e and sum e <= sum a; returns
/// true when the preconditions do not hold.
[[nodiscard]] bool cardinality_lemma_holds(const Partition& a, const Partition& e);

}  // namespace rankone
