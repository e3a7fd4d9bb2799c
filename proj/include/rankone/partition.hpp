#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

namespace rankone {

/// Extended-integer sentinels for out-of-range sequence entries.
inline constexpr std::int64_t kPlusInfinity = std::numeric_limits<std::int64_t>::max();
inline constexpr std::int64_t kMinusInfinity = std::numeric_limits<std::int64_t>::min();

/// Nonincreasing sequence of nonnegative integers (possibly empty).
///
/// at(i) uses 1-based indexing with the conventions a_i = +inf for i < 1 and
/// a_i = -inf for i > size(). All majorization code reads entries through it.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidPartition if the parts are negative or increasing somewhere.
  explicit Partition(std::vector<std::int64_t> parts);
  Partition(std::initializer_list<std::int64_t> parts) : Partition(std::vector<std::int64_t>(parts)) {}

  [[nodiscard]] int size() const { return static_cast<int>(parts_.size()); }
  [[nodiscard]] bool empty() const { return parts_.empty(); }
  [[nodiscard]] const std::vector<std::int64_t>& parts() const { return parts_; }

  [[nodiscard]] std::int64_t at(int i) const {
    if (i < 1) return kPlusInfinity;
    if (i > size()) return kMinusInfinity;
    return parts_[static_cast<std::size_t>(i) - 1];
  }

  [[nodiscard]] std::int64_t sum() const;
  /// Sum of entries i..j (1-based, inclusive, clipped to the valid range).
  [[nodiscard]] std::int64_t sum(int i, int j) const;
  /// Number of positive entries.
  [[nodiscard]] int positive_count() const;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<std::int64_t> parts_;
};

}  // namespace rankone
