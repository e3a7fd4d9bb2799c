#include "rankone/factor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace rankone {

namespace {

bool coeff_less(const Scalar& a, const Scalar& b) {
  if (a.field().is_prime()) return a.residue() < b.residue();
  return a.rational() < b.rational();
}

bool poly_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t k = a.coeffs().size(); k-- > 0;) {
    const Scalar &x = a.coeffs()[k], &y = b.coeffs()[k];
    if (x == y) continue;
    return coeff_less(x, y);
  }
  return false;
}

void add_factor(std::vector<FactorPower>& out, UniPoly g, int mult) {
  for (FactorPower& fp : out) {
    if (fp.factor == g) {
      fp.multiplicity += mult;
      return;
    }
  }
  out.push_back({std::move(g), mult});
}

// ---- prime fields ---------------------------------------------------------

// c(s) = d(s)^p with all exponents divisible by p; returns d.
UniPoly pth_root(const UniPoly& c) {
  const std::uint32_t p = c.field().modulus();
  std::vector<Scalar> out;
  for (std::size_t k = 0; k < c.coeffs().size(); k += p) out.push_back(c.coeffs()[k]);
  return UniPoly(c.field(), std::move(out));
}

std::vector<FactorPower> squarefree_prime(const UniPoly& f) {
  std::vector<FactorPower> out;
  if (f.degree() <= 0) return out;
  const std::uint32_t p = f.field().modulus();
  const UniPoly fp = f.derivative();
  UniPoly c = f;
  if (!fp.is_zero()) {
    c = gcd(f, fp);
    UniPoly w = f / c;
    int i = 1;
    while (!w.is_one()) {
      UniPoly y = gcd(w, c);
      UniPoly fac = (w / y).monic();
      if (fac.degree() > 0) add_factor(out, std::move(fac), i);
      w = y;
      c = c / y;
      ++i;
    }
  }
  if (c.degree() > 0) {
    for (auto& [g, j] : squarefree_prime(pth_root(c.monic()))) add_factor(out, g, j * static_cast<int>(p));
  }
  return out;
}

std::vector<std::pair<UniPoly, int>> distinct_degree(UniPoly f) {
  std::vector<std::pair<UniPoly, int>> out;
  const FieldSpec field = f.field();
  const std::uint32_t p = field.modulus();
  const UniPoly s = UniPoly::variable(field);
  UniPoly h = s % f;
  for (int i = 1; f.degree() >= 2 * i; ++i) {
    h = powmod(h, p, f);
    UniPoly g = gcd(h - s, f);
    if (!g.is_one()) {
      out.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
  return out;
}

UniPoly random_poly(const FieldSpec& field, int below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, field.modulus() - 1);
  std::vector<Scalar> c;
  for (int k = 0; k < below_degree; ++k) c.emplace_back(field, static_cast<std::int64_t>(dist(rng)));
  return UniPoly(field, std::move(c));
}

void equal_degree(const UniPoly& g, int d, std::mt19937_64& rng, std::vector<UniPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const FieldSpec field = g.field();
  const std::uint32_t p = field.modulus();
  for (;;) {
    const UniPoly a = random_poly(field, g.degree(), rng);
    if (a.degree() <= 0) continue;
    UniPoly candidate(field);
    if (p == 2) {
      UniPoly x = a, acc = a;
      for (int j = 1; j < d; ++j) {
        x = x * x % g;
        acc += x;
      }
      candidate = gcd(acc, g);
    } else {
      // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
      UniPoly x = a % g, acc = x;
      for (int j = 1; j < d; ++j) {
        x = powmod(x, p, g);
        acc = acc * x % g;
      }
      UniPoly b = powmod(acc, (p - 1) / 2, g);
      candidate = gcd(b - UniPoly::one(field), g);
    }
    if (candidate.degree() > 0 && candidate.degree() < g.degree()) {
      equal_degree(candidate, d, rng, out);
      equal_degree(g / candidate, d, rng, out);
      return;
    }
  }
}

// ---- rationals -------------------------------------------------------------

std::vector<FactorPower> squarefree_rational(const UniPoly& f) {
  // Yun's algorithm (characteristic zero).
  std::vector<FactorPower> out;
  if (f.degree() <= 0) return out;
  const UniPoly fp = f.derivative();
  const UniPoly a0 = gcd(f, fp);
  UniPoly b = f / a0;
  UniPoly c = fp / a0;
  UniPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    UniPoly a = gcd(b, d);
    b = b / a;
    c = d / a;
    d = c - b.derivative();
    if (a.degree() > 0) out.push_back({a.monic(), i});
  }
  return out;
}

std::vector<mpz_class> integer_coeffs(const UniPoly& f) {
  mpz_class den = 1;
  for (const Scalar& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> out;
  mpz_class content = 0;
  for (const Scalar& c : f.coeffs()) {
    mpz_class v = c.rational().get_num() * (den / c.rational().get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (content != 0)
    for (mpz_class& v : out) v /= content;
  return out;
}

mpz_class eval_int(const std::vector<mpz_class>& f, long x) {
  mpz_class acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, int>> primes;
  for (mpz_class d = 2; d * d <= n; ++d) {
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0) {
      n /= d;
      ++e;
    }
    if (e > 0) primes.emplace_back(d, e);
  }
  if (n > 1) primes.emplace_back(n, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [q, e] : primes) {
    const std::size_t base = divs.size();
    mpz_class pw = 1;
    for (int k = 1; k <= e; ++k) {
      pw *= q;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pw);
    }
  }
  return divs;
}

UniPoly interpolate(const FieldSpec& q, const std::vector<long>& xs, const std::vector<mpz_class>& ys) {
  UniPoly result(q);
  for (std::size_t j = 0; j < xs.size(); ++j) {
    UniPoly term = UniPoly::constant(Scalar(q, ys[j]));
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (k == j) continue;
      const UniPoly lin(q, {-static_cast<std::int64_t>(xs[k]), 1});
      term = term * lin;
      term = term.scaled(Scalar(q, static_cast<std::int64_t>(xs[j] - xs[k])).inverse());
    }
    result += term;
  }
  return result;
}

// Finds a nonconstant proper factor of the squarefree monic f (degree >= 2)
// or returns the zero polynomial when f is irreducible.
UniPoly kronecker_split(const UniPoly& f) {
  const FieldSpec q = f.field();
  const std::vector<mpz_class> F = integer_coeffs(f);
  const int n = f.degree();

  // Sample points ordered 0, 1, -1, 2, -2, ...; an integer root yields a factor directly.
  std::vector<std::pair<long, mpz_class>> samples;
  for (long k = 0; static_cast<int>(samples.size()) < n + 6; ++k) {
    const long x = (k % 2 == 1) ? (k + 1) / 2 : -(k / 2);
    mpz_class v = eval_int(F, x);
    if (v == 0) return UniPoly(q, {-static_cast<std::int64_t>(x), 1});
    samples.emplace_back(x, v);
  }
  std::stable_sort(samples.begin(), samples.end(),
                   [](const auto& a, const auto& b) { return mpz_cmpabs(a.second.get_mpz_t(), b.second.get_mpz_t()) < 0; });

  for (int d = 1; d <= n / 2; ++d) {
    std::vector<long> xs;
    std::vector<std::vector<mpz_class>> choices;
    for (int j = 0; j <= d; ++j) {
      xs.push_back(samples[j].first);
      std::vector<mpz_class> divs = positive_divisors(samples[j].second);
      if (j > 0) {
        const std::size_t m = divs.size();
        for (std::size_t t = 0; t < m; ++t) divs.push_back(-divs[t]);
      }
      choices.push_back(std::move(divs));
    }
    std::vector<std::size_t> idx(choices.size(), 0);
    for (;;) {
      std::vector<mpz_class> ys;
      for (std::size_t j = 0; j < idx.size(); ++j) ys.push_back(choices[j][idx[j]]);
      UniPoly h = interpolate(q, xs, ys);
      if (h.degree() == d && divides(h, f)) return h.monic();
      std::size_t j = 0;
      while (j < idx.size() && ++idx[j] == choices[j].size()) idx[j++] = 0;
      if (j == idx.size()) break;
    }
  }
  return UniPoly(q);
}

void factor_rational_squarefree(const UniPoly& f, std::vector<UniPoly>& out) {
  if (f.degree() <= 1) {
    if (f.degree() == 1) out.push_back(f.monic());
    return;
  }
  UniPoly h = kronecker_split(f);
  if (h.is_zero()) {
    out.push_back(f.monic());
    return;
  }
  factor_rational_squarefree(h, out);
  factor_rational_squarefree((f / h).monic(), out);
}

}  // namespace

std::vector<FactorPower> squarefree_decomposition(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
  std::vector<FactorPower> out =
      f.field().is_prime() ? squarefree_prime(f.monic()) : squarefree_rational(f.monic());
  std::sort(out.begin(), out.end(),
            [](const FactorPower& a, const FactorPower& b) { return a.multiplicity < b.multiplicity; });
  return out;
}

Factorization factorize(const UniPoly& f, std::uint64_t seed) {
  if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  Factorization result{f.leading(), {}};
  std::mt19937_64 rng(seed);
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    std::vector<UniPoly> irreducibles;
    if (f.field().is_prime()) {
      for (const auto& [g, d] : distinct_degree(part)) equal_degree(g, d, rng, irreducibles);
    } else {
      factor_rational_squarefree(part, irreducibles);
    }
    for (UniPoly& g : irreducibles) add_factor(result.factors, std::move(g), mult);
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const FactorPower& a, const FactorPower& b) { return poly_less(a.factor, b.factor); });
  return result;
}

UniPoly Factorization::expand() const {
  UniPoly acc = UniPoly::constant(unit);
  for (const auto& [g, e] : factors)
    for (int k = 0; k < e; ++k) acc *= g;
  return acc;
}

std::vector<int> irreducible_degrees(const Factorization& fac) {
  std::vector<int> out;
  for (const auto& [g, e] : fac.factors)
    for (int k = 0; k < e; ++k) out.push_back(g.degree());
  return out;
}

}  // namespace rankone
