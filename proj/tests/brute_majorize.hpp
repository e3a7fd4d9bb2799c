#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "rankone/partition.hpp"

namespace rankone::testing {

// Every partition of exactly `len` parts (zeros allowed) summing to `total`.
inline std::vector<Partition> partitions(std::int64_t total, int len) {
  std::vector<Partition> out;
  std::vector<std::int64_t> cur;
  std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t left, std::int64_t cap) {
    if (static_cast<int>(cur.size()) == len) {
      if (left == 0) out.emplace_back(cur);
      return;
    }
    for (std::int64_t x = std::min(left, cap); x >= 0; --x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  rec(total, total);
  return out;
}

// Every partition with at most `len` parts padded to length `len`, sum <= max_total.
inline std::vector<Partition> partitions_up_to(std::int64_t max_total, int len) {
  std::vector<Partition> out;
  for (std::int64_t s = 0; s <= max_total; ++s)
    for (Partition& p : partitions(s, len)) out.push_back(std::move(p));
  return out;
}

// One-step majorization read literally from the three defining conditions
// with s = 1 and a_1 = sum g - sum d.
inline bool one_step_by_definition(const Partition& g, const Partition& d) {
  const int m = d.size();
  for (int i = 1; i <= m; ++i)
    if (d.at(i) < g.at(i + 1)) return false;
  int h = 1;
  while (!(d.at(h) < g.at(h))) ++h;
  return g.sum(1, h) - d.sum(1, h - 1) <= g.sum() - d.sum();
}

}  // namespace rankone::testing
