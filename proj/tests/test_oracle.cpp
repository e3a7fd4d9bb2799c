#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "rankone/oracle.hpp"
#include "test_util.hpp"

using namespace rankone;
using testing::poly;

namespace {

const FieldSpec F2 = FieldSpec::prime(2);

Pencil diag2(const UniPoly& a, const UniPoly& b) {
  const FieldSpec f = a.field();
  return Pencil::from_polys(f, {{a, UniPoly(f)}, {UniPoly(f), b}});
}

}  // namespace

TEST_CASE("enumerate_rank_one examples") {
  CHECK(enumerate_rank_one(F2, 2, 2).size() == 90);
  CHECK(CandidateSpace(F2, 2, 2).size() == 90);
  std::set<std::uint64_t> one_by_one;
  for (const Pencil& p : enumerate_rank_one(F2, 1, 1)) one_by_one.insert(encode_pencil(p));
  const std::set<std::uint64_t> expected{encode_pencil(Pencil::from_polys(F2, {{poly(F2, {1})}})),
                                         encode_pencil(Pencil::from_polys(F2, {{poly(F2, {0, 1})}})),
                                         encode_pencil(Pencil::from_polys(F2, {{poly(F2, {1, 1})}}))};
  CHECK(one_by_one == expected);
}

TEST_CASE("candidates are exactly the rank-one pencils") {
  for (const std::uint32_t p : {2u, 3u})
    for (const auto& [R, C] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 2}, {2, 2}, {2, 1}, {1, 3}}) {
      const FieldSpec f = FieldSpec::prime(p);
      std::set<std::uint64_t> emitted;
      const std::vector<Pencil> all = enumerate_rank_one(f, R, C);
      CHECK(all.size() == CandidateSpace(f, R, C).size());
      for (const Pencil& c : all) {
        REQUIRE(normal_rank(c) == 1);
        emitted.insert(encode_pencil(c));
      }
      const std::uint64_t N = pencil_count(f, R, C);
      for (std::uint64_t code = 0; code < N; ++code)
        REQUIRE((normal_rank(decode_pencil(f, R, C, code)) == 1) == emitted.count(code) > 0);
    }
}

TEST_CASE("limits") {
  CHECK_THROWS_AS(CandidateSpace(FieldSpec::prime(37), 2, 2), FieldTooLarge);
  CHECK_THROWS_AS(CandidateSpace(F2, 5, 5), ShapeTooLarge);
  CHECK_THROWS_AS(CandidateSpace(FieldSpec::rational(), 2, 2), UnsupportedField);
  CHECK_NOTHROW(CandidateSpace(FieldSpec::prime(31), 4, 5));
  CHECK_THROWS_AS((void)brute_force_decide(Pencil(F2, 2, 2), Pencil(F2, 2, 3)), ShapeMismatch);
  CHECK_THROWS_AS((void)brute_force_row_completion(Pencil(F2, 1, 5), kronecker_invariants(Pencil(F2, 2, 5))), ShapeTooLarge);
}

TEST_CASE("brute_force_decide examples") {
  const UniPoly s = poly(F2, {0, 1}), one = poly(F2, {1}), s1 = poly(F2, {1, 1});
  const BruteForceResult a = brute_force_decide(diag2(s, one), diag2(s, s1));
  REQUIRE(a.exists);
  REQUIRE(a.witness.has_value());
  CHECK(normal_rank(*a.witness) == 1);
  CHECK(strictly_equivalent(diag2(s, one) + *a.witness, diag2(s, s1)));
  CHECK(!brute_force_decide(diag2(s, s), diag2(s1, s1)).exists);
  CHECK(!brute_force_decide(Pencil(F2, 2, 2), Pencil(F2, 2, 2)).exists);
}

TEST_CASE("brute_force_row_completion examples") {
  const Pencil inner = Pencil::from_polys(F2, {{poly(F2, {0, 1}), poly(F2, {1})}});
  const Pencil outer = Pencil::from_polys(F2, {{poly(F2, {0, 1}), poly(F2, {1})}, {UniPoly(F2), UniPoly(F2)}});
  CHECK(brute_force_row_completion(inner, kronecker_invariants(outer)));
  KroneckerInvariants too_big = kronecker_invariants(outer);
  too_big.rank = 3;
  CHECK(!brute_force_row_completion(inner, too_big));
}

TEST_CASE("witnesses re-verify") {
  std::mt19937_64 rng(51);
  for (const auto& [p, R, C] : std::vector<std::tuple<std::uint32_t, std::size_t, std::size_t>>{
           {2, 2, 2}, {2, 2, 3}, {3, 2, 2}, {2, 3, 2}}) {
    const FieldSpec f = FieldSpec::prime(p);
    BruteForceOracle oracle(f, R, C);
    for (int trial = 0; trial < 100; ++trial) {
      const Pencil a = testing::random_sparse_pencil(f, R, C, rng);
      const Pencil b = testing::random_sparse_pencil(f, R, C, rng);
      const BruteForceResult r = oracle.decide(a, b);
      if (!r.exists) continue;
      REQUIRE(r.witness.has_value());
      REQUIRE(normal_rank(*r.witness) == 1);
      REQUIRE(strictly_equivalent(a + *r.witness, b));
    }
  }
}
