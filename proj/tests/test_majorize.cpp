#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "brute_majorize.hpp"
#include "rankone/majorize.hpp"

using namespace rankone;
using namespace rankone::testing;

TEST_CASE("gen_majorized examples") {
  const std::vector<std::int64_t> g{3, 2, 2, 1}, d{3, 1}, a{2, 2};
  CHECK(gen_majorized(g, d, a));
  CHECK(gen_majorized(std::vector<std::int64_t>{4, 2}, std::vector<std::int64_t>{4, 2}, {}));
  CHECK(!gen_majorized(std::vector<std::int64_t>{4, 2}, std::vector<std::int64_t>{4, 1}, {}));
  CHECK(!gen_majorized(std::vector<std::int64_t>{3, 0}, std::vector<std::int64_t>{1}, std::vector<std::int64_t>{2}));
  CHECK_THROWS_AS((void)gen_majorized(g, d, std::vector<std::int64_t>{2}), LengthMismatch);
}

TEST_CASE("one_step_majorized examples") {
  CHECK(one_step_majorized(Partition{0, 0, 0}, Partition{5, 1}));
  CHECK(one_step_majorized(Partition{17, 8, 6, 5, 5, 5, 3, 1}, Partition{8, 6, 5, 5, 5, 3, 1}));
  CHECK(!one_step_majorized(Partition{2, 2}, Partition{1}));
  CHECK_THROWS_AS((void)one_step_majorized(Partition{2, 2}, Partition{1, 1}), LengthMismatch);
}

TEST_CASE("build_g_with_sum examples") {
  const Partition a{8, 6, 5, 5, 5, 3, 1};
  CHECK(build_g_with_sum(50, a) == Partition{17, 8, 6, 5, 5, 5, 3, 1});
  CHECK(build_g_with_sum(34, a) == Partition{5, 5, 5, 5, 5, 5, 3, 1});
  CHECK(build_g_with_sum(5, a) == Partition{1, 1, 1, 1, 1, 0, 0, 0});
  CHECK(build_g_with_sum(0, Partition{}) == Partition{0});
}

TEST_CASE("build_e_with_sum examples") {
  CHECK(build_e_with_sum(2, Partition{3, 2}) == Partition{2});
  CHECK(!build_e_with_sum(1, Partition{3, 2}).has_value());
  CHECK(build_e_with_sum(7, Partition{3, 2}) == Partition{7});
  CHECK(build_e_with_sum(0, Partition{4}) == Partition{});
  CHECK(!build_e_with_sum(4, Partition{4}).has_value());
}

TEST_CASE("ell_f_fprime examples") {
  const LastDifference a = ell_f_fprime(Partition{2, 1}, Partition{1, 1});
  CHECK(a.ell == 1);
  CHECK(a.f == 1);
  CHECK(a.f_prime == 1);
  // d_3 = 1 is not below c_2 = 1, so the scan stops at f' = 2.
  const LastDifference b = ell_f_fprime(Partition{3, 1, 0}, Partition{3, 2, 1});
  CHECK(b.ell == 3);
  CHECK(b.f == 3);
  CHECK(b.f_prime == 2);
  const LastDifference c = ell_f_fprime(Partition{1}, Partition{0});
  CHECK(c.ell == 1);
  CHECK(c.f == 1);
  CHECK(c.f_prime == 1);
  CHECK_THROWS_AS((void)ell_f_fprime(Partition{1}, Partition{1}), EqualPartitions);
}

TEST_CASE("simultaneous_g examples") {
  const Partition c{2, 0}, d{1, 1};
  // f = f' = 2, so the bound is min-sum 1 plus max{c_2, d_2} = 1.
  CHECK(simultaneous_g_bound(c, d) == 2);
  const auto g2 = simultaneous_g(2, c, d);
  REQUIRE(g2.has_value());
  CHECK(one_step_majorized(*g2, c));
  CHECK(one_step_majorized(*g2, d));
  CHECK(g2->sum() == 2);
  CHECK(!simultaneous_g(3, c, d).has_value());
  for (const Partition& g : partitions(3, 3)) CHECK(!(one_step_majorized(g, c) && one_step_majorized(g, d)));
  CHECK(!simultaneous_g(4, c, d).has_value());
  CHECK(simultaneous_g(0, Partition{1}, Partition{0}) == Partition{0, 0});
  CHECK_THROWS_AS((void)simultaneous_g(1, c, c), EqualPartitions);
}

TEST_CASE("simultaneous_e_exists examples") {
  const Partition c{2, 0}, d{1, 1};
  for (std::int64_t E = 0; E <= 6; ++E) {
    bool brute = false;
    for (const Partition& e : partitions(E, 1)) brute = brute || (one_step_majorized(c, e) && one_step_majorized(d, e));
    CHECK(simultaneous_e_exists(E, c, d) == brute);
  }
  CHECK(simultaneous_e_exists(0, Partition{1}, Partition{0}));
  CHECK(!simultaneous_e_exists(1, Partition{1}, Partition{0}));
  bool brute = false;
  for (const Partition& e : partitions(3, 2))
    brute = brute || (one_step_majorized(Partition{3, 1, 0}, e) && one_step_majorized(Partition{3, 2, 1}, e));
  CHECK(simultaneous_e_exists(3, Partition{3, 1, 0}, Partition{3, 2, 1}) == brute);
}

TEST_CASE("cardinality_lemma_holds examples") {
  CHECK(cardinality_lemma_holds(Partition{2, 1, 0}, Partition{1, 1}));
  CHECK(cardinality_lemma_holds(Partition{1}, Partition{}));
}

TEST_CASE("one_step_majorized agrees with the definition and with gen_majorized") {
  for (int m = 0; m <= 4; ++m)
    for (const Partition& d : partitions_up_to(7, m))
      for (const Partition& g : partitions_up_to(8, m + 1)) {
        const bool fast = one_step_majorized(g, d);
        REQUIRE(fast == one_step_by_definition(g, d));
        const std::vector<std::int64_t> a{g.sum() - d.sum()};
        REQUIRE(fast == gen_majorized(g.parts(), d.parts(), a));
      }
}

TEST_CASE("build_g_with_sum on the exhaustive grid") {
  for (int m = 0; m <= 4; ++m)
    for (const Partition& a : partitions_up_to(10, m))
      for (std::int64_t S = 0; S <= 12; ++S) {
        const Partition g = build_g_with_sum(S, a);
        REQUIRE(g.size() == m + 1);
        REQUIRE(g.sum() == S);
        REQUIRE(one_step_majorized(g, a));
      }
}

TEST_CASE("build_e_with_sum feasibility equals exhaustive search") {
  for (int m = 1; m <= 4; ++m)
    for (const Partition& a : partitions_up_to(10, m))
      for (std::int64_t E = 0; E <= 12; ++E) {
        bool brute = false;
        for (const Partition& e : partitions(E, m - 1)) brute = brute || one_step_majorized(a, e);
        const auto got = build_e_with_sum(E, a);
        REQUIRE(got.has_value() == brute);
        if (got) {
          REQUIRE(got->sum() == E);
          REQUIRE(one_step_majorized(a, *got));
        }
      }
}

TEST_CASE("simultaneous solvers equal exhaustive search") {
  for (int m = 1; m <= 4; ++m) {
    const std::vector<Partition> pool = partitions_up_to(8, m);
    std::vector<std::vector<Partition>> g_by_sum, e_by_sum;
    for (std::int64_t s = 0; s <= 14; ++s) {
      g_by_sum.push_back(partitions(s, m + 1));
      e_by_sum.push_back(partitions(s, m - 1));
    }
    for (const Partition& c : pool)
      for (const Partition& d : pool) {
        if (c == d) continue;
        for (std::int64_t S = 0; S <= 14; ++S) {
          bool brute_g = false;
          for (const Partition& g : g_by_sum[static_cast<std::size_t>(S)])
            if (one_step_majorized(g, c) && one_step_majorized(g, d)) {
              brute_g = true;
              break;
            }
          const auto got = simultaneous_g(S, c, d);
          REQUIRE(got.has_value() == brute_g);
          if (got) {
            REQUIRE(got->sum() == S);
            REQUIRE(one_step_majorized(*got, c));
            REQUIRE(one_step_majorized(*got, d));
          }
          bool brute_e = false;
          for (const Partition& e : e_by_sum[static_cast<std::size_t>(S)])
            if (one_step_majorized(c, e) && one_step_majorized(d, e)) {
              brute_e = true;
              break;
            }
          REQUIRE(simultaneous_e_exists(S, c, d) == brute_e);
          if (brute_e) REQUIRE(simultaneous_e_inequality(S, c, d));
        }
      }
  }
}

TEST_CASE("cardinality property on random feasible pairs") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> len(1, 7), part(0, 9);
  int checked = 0;
  while (checked < 10000) {
    std::vector<std::int64_t> raw(static_cast<std::size_t>(len(rng)));
    for (auto& x : raw) x = part(rng);
    std::sort(raw.rbegin(), raw.rend());
    const Partition a(raw);
    std::uniform_int_distribution<std::int64_t> esum(0, a.sum());
    const auto e = build_e_with_sum(esum(rng), a);
    if (!e) continue;
    REQUIRE(one_step_majorized(a, *e));
    REQUIRE(cardinality_lemma_holds(a, *e));
    REQUIRE(a.positive_count() >= e->positive_count());
    ++checked;
  }
}
