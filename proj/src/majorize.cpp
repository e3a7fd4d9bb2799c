#include "rankone/majorize.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "rankone/errors.hpp"

namespace rankone {

namespace {

std::int64_t seq_at(std::span<const std::int64_t> x, int i) {
  if (i < 1) return kPlusInfinity;
  if (i > static_cast<int>(x.size())) return kMinusInfinity;
  return x[static_cast<std::size_t>(i) - 1];
}

std::int64_t seq_sum(std::span<const std::int64_t> x, int upto) {
  std::int64_t s = 0;
  for (int i = 1; i <= std::min(upto, static_cast<int>(x.size())); ++i) s += x[static_cast<std::size_t>(i) - 1];
  return s;
}

void require_nonincreasing(std::span<const std::int64_t> x) {
  for (std::size_t i = 1; i < x.size(); ++i)
    if (x[i] > x[i - 1]) throw InvalidPartition("sequence is not nonincreasing");
}

}  // namespace

bool gen_majorized(std::span<const std::int64_t> g, std::span<const std::int64_t> d,
                   std::span<const std::int64_t> a) {
  if (g.size() != d.size() + a.size()) throw LengthMismatch("generalized majorization needs len(g) = len(d) + len(a)");
  require_nonincreasing(g);
  require_nonincreasing(d);
  require_nonincreasing(a);
  const int m = static_cast<int>(d.size());
  const int s = static_cast<int>(a.size());

  for (int i = 1; i <= m; ++i)
    if (seq_at(d, i) < seq_at(g, i + s)) return false;

  for (int j = 1; j <= s; ++j) {
    int h = 0;
    for (int i = 1; i <= m + s; ++i) {
      if (seq_at(d, i - j + 1) < seq_at(g, i)) {
        h = i;
        break;
      }
    }
    // d_{m+1} = -inf guarantees h <= m + j.
    if (seq_sum(g, h) - seq_sum(d, h - j) > seq_sum(a, j)) return false;
  }
  return seq_sum(g, m + s) == seq_sum(d, m) + seq_sum(a, s);
}

bool one_step_majorized(const Partition& g, const Partition& d) {
  if (g.size() != d.size() + 1) throw LengthMismatch("one-step majorization needs len(g) = len(d) + 1");
  const int m = d.size();
  int h = m + 1;
  for (int i = 1; i <= m; ++i) {
    if (d.at(i) < g.at(i)) {
      h = i;
      break;
    }
  }
  for (int i = h; i <= m; ++i)
    if (d.at(i) != g.at(i + 1)) return false;
  return true;
}

Partition build_g_with_sum(std::int64_t S, const Partition& a) {
  if (S < 0) throw std::invalid_argument("target sum must be nonnegative");
  const int m = a.size();
  int k = m + 1;  // a_{m+1} = -inf makes the test vacuous at m + 1
  for (int i = 1; i <= m; ++i) {
    if (S >= a.sum(i + 1, m) + (i + 1) * a.at(i)) {
      k = i;
      break;
    }
  }
  const std::int64_t rest = S - a.sum(k, m);
  const std::int64_t q = rest / k;
  const std::int64_t r = rest % k;
  std::vector<std::int64_t> g;
  g.reserve(static_cast<std::size_t>(m) + 1);
  for (int i = 1; i <= k; ++i) g.push_back(i <= r ? q + 1 : q);
  for (int i = k + 1; i <= m + 1; ++i) g.push_back(a.at(i - 1));
  return Partition(std::move(g));
}

std::optional<Partition> build_e_with_sum(std::int64_t E, const Partition& a) {
  if (a.empty()) throw std::invalid_argument("build_e_with_sum needs a nonempty partition");
  if (E < 0) throw std::invalid_argument("target sum must be nonnegative");
  const int m = a.size();
  if (m == 1) return E == 0 ? std::optional<Partition>(Partition{}) : std::nullopt;
  const bool exact = E == a.sum(2, m);
  const bool above = E >= a.at(1) + a.sum(3, m);
  if (!exact && !above) return std::nullopt;
  std::vector<std::int64_t> e;
  e.push_back(E - a.sum(3, m));
  for (int i = 2; i <= m - 1; ++i) e.push_back(a.at(i + 1));
  return Partition(std::move(e));
}

LastDifference ell_f_fprime(const Partition& c, const Partition& d) {
  if (c.size() != d.size()) throw LengthMismatch("partitions of different lengths");
  if (c == d) throw EqualPartitions("c and d coincide");
  LastDifference r{0, 1, 1};
  for (int i = 1; i <= c.size(); ++i)
    if (c.at(i) != d.at(i)) r.ell = i;
  for (int i = 1; i <= r.ell; ++i) {
    if (c.at(i) < d.at(i - 1)) r.f = i;
    if (d.at(i) < c.at(i - 1)) r.f_prime = i;
  }
  return r;
}

std::int64_t simultaneous_g_bound(const Partition& c, const Partition& d) {
  const LastDifference ld = ell_f_fprime(c, d);
  std::int64_t s = 0;
  for (int i = 1; i <= c.size(); ++i) s += std::min(c.at(i), d.at(i));
  return s + std::max(c.at(ld.f), d.at(ld.f_prime));
}

namespace {

// Construction for the orientation c_ell > d_ell.
Partition simultaneous_g_oriented(std::int64_t S, const Partition& c, const Partition& d) {
  const LastDifference ld = ell_f_fprime(c, d);
  const int m = c.size();
  const int f = ld.f;
  std::vector<std::int64_t> mins;
  for (int i = 1; i <= m; ++i) mins.push_back(std::min(c.at(i), d.at(i)));

  std::int64_t prefix = 0;
  for (int i = 1; i < f; ++i) prefix += mins[static_cast<std::size_t>(i) - 1];

  std::vector<std::int64_t> g;
  if (S < prefix) {
    std::int64_t acc = 0;
    int k = 1;
    while (S >= acc + mins[static_cast<std::size_t>(k) - 1]) acc += mins[static_cast<std::size_t>(k++) - 1];
    for (int i = 1; i < k; ++i) g.push_back(mins[static_cast<std::size_t>(i) - 1]);
    g.push_back(S - acc);
    while (static_cast<int>(g.size()) < m + 1) g.push_back(0);
    return Partition(std::move(g));
  }
  std::vector<std::int64_t> tail(d.parts().begin() + (f - 1), d.parts().end());
  const Partition gbar = build_g_with_sum(S - prefix, Partition(std::move(tail)));
  for (int i = 1; i < f; ++i) g.push_back(mins[static_cast<std::size_t>(i) - 1]);
  g.insert(g.end(), gbar.parts().begin(), gbar.parts().end());
  return Partition(std::move(g));
}

}  // namespace

std::optional<Partition> simultaneous_g(std::int64_t S, const Partition& c, const Partition& d) {
  if (S < 0) throw std::invalid_argument("target sum must be nonnegative");
  if (S > simultaneous_g_bound(c, d)) return std::nullopt;
  const LastDifference ld = ell_f_fprime(c, d);
  if (c.at(ld.ell) > d.at(ld.ell)) return simultaneous_g_oriented(S, c, d);
  return simultaneous_g_oriented(S, d, c);
}

bool simultaneous_e_inequality(std::int64_t E, const Partition& c, const Partition& d) {
  const LastDifference ld = ell_f_fprime(c, d);
  std::int64_t s = 0;
  for (int i = 1; i <= c.size(); ++i) s += std::max(c.at(i), d.at(i));
  return E >= s - std::max(c.at(ld.f), d.at(ld.f_prime));
}

bool simultaneous_e_exists(std::int64_t E, const Partition& c, const Partition& d) {
  const LastDifference ld = ell_f_fprime(c, d);
  const int m = c.size();
  if (m == 1) return E == 0;
  if (ld.f > 1 && ld.f_prime > 1) return simultaneous_e_inequality(E, c, d);
  const auto mx = [&](int i) { return std::max(c.at(i), d.at(i)); };
  std::int64_t from2 = 0, from3 = 0;
  for (int i = 2; i <= m; ++i) from2 += mx(i);
  for (int i = 3; i <= m; ++i) from3 += mx(i);
  return E == from2 || E >= mx(1) + from3;
}

bool cardinality_lemma_holds(const Partition& a, const Partition& e) {
  if (a.size() != e.size() + 1) return true;
  if (!one_step_majorized(a, e) || e.sum() > a.sum()) return true;
  return a.positive_count() >= e.positive_count();
}

}  // namespace rankone
