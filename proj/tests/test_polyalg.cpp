#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "rankone/factor.hpp"
#include "rankone/hom_poly.hpp"
#include "test_util.hpp"

using namespace rankone;
using testing::poly;

namespace {

// Every monic polynomial of exactly degree d over GF(p).
std::vector<UniPoly> monic_of_degree(const FieldSpec& f, int d) {
  const std::uint32_t p = f.modulus();
  std::vector<UniPoly> out;
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) total *= p;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Scalar> c;
    std::uint64_t x = code;
    for (int i = 0; i < d; ++i) {
      c.emplace_back(f, static_cast<std::int64_t>(x % p));
      x /= p;
    }
    c.push_back(Scalar::one(f));
    out.emplace_back(f, std::move(c));
  }
  return out;
}

bool irreducible_by_trial_division(const UniPoly& g) {
  for (int d = 1; 2 * d <= g.degree(); ++d)
    for (const UniPoly& h : monic_of_degree(g.field(), d))
      if (divides(h, g)) return false;
  return g.degree() >= 1;
}

}  // namespace

TEST_CASE("gcd and lcm examples") {
  const FieldSpec q = FieldSpec::rational(), f2 = FieldSpec::prime(2);
  CHECK(gcd(poly(q, {-1, 0, 1}), poly(q, {1, -2, 1})) == poly(q, {-1, 1}));
  CHECK(gcd(poly(q, {2, 4}), UniPoly(q)) == poly(q, {2, 4}).monic());
  CHECK(gcd(UniPoly(q), UniPoly(q)).is_zero());
  CHECK(lcm(poly(f2, {0, 1}), poly(f2, {1, 1})) == poly(f2, {0, 1, 1}));
  const UniPoly a = poly(q, {-1, 0, 1}), b = poly(q, {1, -2, 1});
  const auto [g, l] = gcd_lcm(a, b);
  CHECK(g * l == (a * b).monic());
  CHECK_THROWS_AS((void)gcd(poly(f2, {1}), poly(FieldSpec::prime(3), {1})), FieldMismatch);
}

TEST_CASE("division") {
  const FieldSpec q = FieldSpec::rational();
  const UniPoly a = poly(q, {1, 2, 3, 4}), b = poly(q, {1, 1});
  const auto [quo, rem] = divmod(a, b);
  CHECK(quo * b + rem == a);
  CHECK(rem.degree() < b.degree());
  CHECK_THROWS_AS((void)divmod(a, UniPoly(q)), DivisionByZero);
  CHECK_THROWS_AS((void)exact_quotient(a, b), NotDivisible);
  CHECK(exact_quotient(a * b, b) == a);
}

TEST_CASE("factorize examples") {
  const FieldSpec f2 = FieldSpec::prime(2), f3 = FieldSpec::prime(3), f5 = FieldSpec::prime(5);
  const Factorization a = factorize(poly(f2, {1, 0, 1}));
  REQUIRE(a.factors.size() == 1);
  CHECK(a.factors[0].factor == poly(f2, {1, 1}));
  CHECK(a.factors[0].multiplicity == 2);
  const Factorization b = factorize(poly(f5, {1, 0, 1}));
  REQUIRE(b.factors.size() == 2);
  CHECK(b.factors[0].factor == poly(f5, {2, 1}));
  CHECK(b.factors[1].factor == poly(f5, {3, 1}));
  const Factorization c = factorize(poly(f3, {1, 0, 1}));
  REQUIRE(c.factors.size() == 1);
  CHECK(c.factors[0].factor == poly(f3, {1, 0, 1}));
  CHECK(c.factors[0].multiplicity == 1);
  CHECK_THROWS((void)factorize(UniPoly(f3)));
}

TEST_CASE("factorize over Q") {
  const FieldSpec q = FieldSpec::rational();
  const UniPoly f = poly(q, {-2, 0, 1}) * poly(q, {1, 1}) * poly(q, {1, 1}) * poly(q, {3, 0, 0, 2});
  const Factorization fac = factorize(f);
  CHECK(fac.expand() == f);
  std::vector<int> degs = irreducible_degrees(fac);
  std::sort(degs.begin(), degs.end());
  CHECK(degs == std::vector<int>{1, 1, 2, 3});
  const Factorization g = factorize(poly(q, {-6, 11, -6, 1}) * poly(q, {4, 0, 9}));
  CHECK(irreducible_degrees(g) == std::vector<int>{1, 1, 1, 2});
}

TEST_CASE("factorize reproduces input and factors are irreducible over small primes") {
  std::mt19937_64 rng(5);
  for (const std::uint32_t p : {2u, 3u, 5u}) {
    const FieldSpec f = FieldSpec::prime(p);
    for (int trial = 0; trial < 500; ++trial) {
      const UniPoly g = testing::random_poly(f, 1 + trial % 8, rng);
      if (g.is_zero()) continue;
      const Factorization fac = factorize(g, static_cast<std::uint64_t>(trial));
      REQUIRE(fac.expand() == g);
      for (std::size_t i = 0; i < fac.factors.size(); ++i) {
        REQUIRE(fac.factors[i].factor.is_monic());
        if (p <= 3) REQUIRE(irreducible_by_trial_division(fac.factors[i].factor));
        for (std::size_t j = 0; j < i; ++j) REQUIRE(!(fac.factors[i].factor == fac.factors[j].factor));
      }
    }
  }
}

TEST_CASE("factorize over Q reproduces input") {
  std::mt19937_64 rng(6);
  const FieldSpec q = FieldSpec::rational();
  for (int trial = 0; trial < 500; ++trial) {
    const UniPoly g = testing::random_poly(q, 1 + trial % 5, rng);
    if (g.is_zero()) continue;
    const Factorization fac = factorize(g);
    REQUIRE(fac.expand() == g);
    for (const FactorPower& fp : fac.factors) {
      REQUIRE(fp.factor.is_monic());
      REQUIRE(fp.factor.degree() >= 1);
    }
  }
}

TEST_CASE("gcd is the greatest common divisor") {
  std::mt19937_64 rng(7);
  for (const std::uint32_t p : {2u, 3u}) {
    const FieldSpec f = FieldSpec::prime(p);
    std::vector<UniPoly> small;
    for (int d = 1; d <= 4; ++d)
      for (UniPoly& h : monic_of_degree(f, d)) small.push_back(std::move(h));
    for (int trial = 0; trial < 500; ++trial) {
      const UniPoly common = testing::random_poly(f, 2, rng);
      const UniPoly a = testing::random_poly(f, 4, rng) * common;
      const UniPoly b = testing::random_poly(f, 4, rng) * common;
      const UniPoly g = gcd(a, b);
      REQUIRE(divides(g, a));
      REQUIRE(divides(g, b));
      if (g.is_zero()) continue;
      for (const UniPoly& h : small)
        if (divides(h, a) && divides(h, b)) REQUIRE(divides(h, g));
    }
  }
  const FieldSpec q = FieldSpec::rational();
  for (int trial = 0; trial < 500; ++trial) {
    const UniPoly common = testing::random_poly(q, 2, rng, -3, 3);
    const UniPoly a = testing::random_poly(q, 3, rng, -3, 3) * common;
    const UniPoly b = testing::random_poly(q, 3, rng, -3, 3) * common;
    const UniPoly g = gcd(a, b);
    REQUIRE(divides(g, a));
    REQUIRE(divides(g, b));
    if (!common.is_zero() && !a.is_zero() && !b.is_zero()) REQUIRE(divides(common, g));
  }
}

TEST_CASE("HomPoly examples") {
  const FieldSpec f2 = FieldSpec::prime(2);
  const HomPoly ts(1, poly(f2, {0, 1}));                             // t * s
  const HomPoly s_spt(0, poly(f2, {0, 1}) * poly(f2, {1, 1}));      // s (s + t)
  CHECK(!divides(ts, s_spt));
  CHECK(gcd(ts, s_spt) == HomPoly(0, poly(f2, {0, 1})));
  CHECK(ts.degree() == 2);
  CHECK(lcm(ts, s_spt) == HomPoly(1, poly(f2, {0, 1, 1})));
  CHECK(ts * s_spt == HomPoly(1, poly(f2, {0, 0, 1, 1})));
  CHECK(quotient(lcm(ts, s_spt), ts) == HomPoly(0, poly(f2, {1, 1})));
  CHECK_THROWS_AS((void)quotient(ts, s_spt), NotDivisible);
  const HomPoly z = HomPoly::zero(f2);
  CHECK(divides(ts, z));
  CHECK(!divides(z, ts));
  CHECK(divides(z, z));
  CHECK_THROWS((void)z.degree());
  const std::vector<HomPoly> chain{ts};
  CHECK(chain_at(chain, 0, f2).is_one());
  CHECK(chain_at(chain, 1, f2) == ts);
  CHECK(chain_at(chain, 2, f2).is_zero());
}

TEST_CASE("HomPoly divisibility is a lattice order") {
  std::mt19937_64 rng(9);
  for (const std::uint32_t p : {2u, 3u}) {
    const FieldSpec f = FieldSpec::prime(p);
    std::vector<HomPoly> pool{HomPoly::zero(f), HomPoly::one(f)};
    std::uniform_int_distribution<int> texp(0, 2);
    const std::vector<UniPoly> atoms{poly(f, {0, 1}), poly(f, {1, 1}), poly(f, {1, 1, 1}), poly(f, {1, 0, 1})};
    while (pool.size() < 50) {
      UniPoly g = UniPoly::one(f);
      for (const UniPoly& a : atoms)
        for (int e = texp(rng); e > 0; --e) g *= a;
      pool.emplace_back(texp(rng), g);
    }
    for (const HomPoly& a : pool) {
      REQUIRE(divides(a, a));
      for (const HomPoly& b : pool) {
        if (divides(a, b) && divides(b, a)) REQUIRE(a == b);
        const HomPoly g = gcd(a, b), l = lcm(a, b);
        REQUIRE(divides(g, a));
        REQUIRE(divides(g, b));
        REQUIRE(divides(a, l));
        REQUIRE(divides(b, l));
        for (const HomPoly& c : pool) {
          if (divides(a, b) && divides(b, c)) REQUIRE(divides(a, c));
          if (divides(c, a) && divides(c, b)) REQUIRE(divides(c, g));
          if (divides(a, c) && divides(b, c)) REQUIRE(divides(l, c));
        }
      }
    }
  }
}
