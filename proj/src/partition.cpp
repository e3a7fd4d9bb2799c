#include "rankone/partition.hpp"

#include <algorithm>
#include <numeric>

#include "rankone/errors.hpp"

namespace rankone {

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InvalidPartition("negative part in " + to_string());
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidPartition("increasing parts in " + to_string());
  }
}

std::int64_t Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0}); }

std::int64_t Partition::sum(int i, int j) const {
  i = std::max(i, 1);
  j = std::min(j, size());
  std::int64_t s = 0;
  for (int k = i; k <= j; ++k) s += parts_[static_cast<std::size_t>(k) - 1];
  return s;
}

int Partition::positive_count() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](std::int64_t x) { return x > 0; }));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) out += (i ? "," : "") + std::to_string(parts_[i]);
  return out + ")";
}

}  // namespace rankone
