#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rankone/invariants.hpp"

namespace rankone {

struct OracleLimits {
  std::uint32_t max_prime = 31;
  std::size_t max_entries = 20;  // rows * cols
};

/// Rank-one pencils of one shape over GF(p): u v(s)^T with u projective
/// (first nonzero entry 1) and v(s) a nonzero degree-<=1 vector, followed by
/// the mirrored family u(s) v^T. Every rank-one pencil appears at least once.
class CandidateSpace {
 public:
  /// Throws UnsupportedField for Q, FieldTooLarge past limits.max_prime and
  /// ShapeTooLarge past limits.max_entries.
  CandidateSpace(FieldSpec field, std::size_t rows, std::size_t cols, OracleLimits limits = {});

  [[nodiscard]] const FieldSpec& field() const { return field_; }
  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  /// (p^rows - 1)/(p - 1) * (p^(2 cols) - 1) + the mirrored count.
  [[nodiscard]] std::uint64_t size() const;

  /// Calls `visit` with each candidate as base-p digits (A0 row-major, then
  /// A1, the encode_pencil order) until it returns true. Returns whether a
  /// visit returned true.
  bool for_each(const std::function<bool(const std::vector<std::uint32_t>&)>& visit) const;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
};

/// Every candidate as a Pencil (duplicates included).
[[nodiscard]] std::vector<Pencil> enumerate_rank_one(const FieldSpec& field, std::size_t rows, std::size_t cols,
                                                     OracleLimits limits = {});

struct BruteForceResult {
  bool exists = false;
  std::optional<Pencil> witness;
};

/// Exhaustive decision over GF(p) for one shape. Invariant records of the
/// pencils it meets are interned once and looked up by encoded pencil, so
/// repeated queries on a grid reduce to table lookups.
class BruteForceOracle {
 public:
  BruteForceOracle(FieldSpec field, std::size_t rows, std::size_t cols, OracleLimits limits = {});

  /// exists <=> some candidate P has A + P strictly equivalent to B; the
  /// first such P (candidate order) is returned as witness.
  [[nodiscard]] BruteForceResult decide(const Pencil& a, const Pencil& b);

  /// Interned class id of a pencil of this shape. Interning may invalidate
  /// references returned by invariants_of.
  [[nodiscard]] int class_id(const Pencil& p);
  [[nodiscard]] const KroneckerInvariants& invariants_of(int id) const { return classes_[static_cast<std::size_t>(id)]; }
  [[nodiscard]] std::size_t class_count() const { return classes_.size(); }

  [[nodiscard]] const CandidateSpace& candidates() const { return space_; }

 private:
  int class_id_of_code(std::uint64_t code);
  int intern(const KroneckerInvariants& inv);
  void check_shape(const Pencil& p) const;

  CandidateSpace space_;
  std::uint64_t pencil_count_;
  std::vector<std::int32_t> dense_;  // used when the pencil space is small enough
  std::unordered_map<std::uint64_t, std::int32_t> sparse_;
  std::unordered_map<std::string, std::int32_t> by_key_;
  std::vector<KroneckerInvariants> classes_;
};

/// One-shot form of BruteForceOracle::decide. Throws ShapeMismatch or
/// FieldMismatch for incompatible inputs and the CandidateSpace errors.
[[nodiscard]] BruteForceResult brute_force_decide(const Pencil& a, const Pencil& b, OracleLimits limits = {});

/// Whether some 1 x cols row h(s) makes [h(s); inner] have invariants
/// `target`. Needs a prime field and at most 4 columns (ShapeTooLarge).
[[nodiscard]] bool brute_force_row_completion(const Pencil& inner, const KroneckerInvariants& target);

}  // namespace rankone
