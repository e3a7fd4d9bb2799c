#include "rankone/selftest.hpp"

#include <chrono>
#include <random>
#include <unordered_map>

#include "rankone/oracle.hpp"

namespace rankone {

namespace {

constexpr std::uint64_t kExhaustiveLimit = 4096;
constexpr std::size_t kMismatchesKept = 10;

class Recorder {
 public:
  explicit Recorder(AgreementReport& report) : report_(report), start_(std::chrono::steady_clock::now()) {}

  void finish() {
    report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  void add(const Pencil& a, const Pencil& b, const DecisionOutcome& d, bool oracle) {
    ++report_.pairs;
    report_.positives += oracle;
    if (d.exists) ++report_.routes[to_string(d.route)];
    if (d.exists == oracle) {
      ++report_.agreements;
    } else if (report_.mismatches.size() < kMismatchesKept) {
      report_.mismatches.push_back("A = " + a.to_string() + ", B = " + b.to_string() +
                                   ": decide " + (d.exists ? "true" : "false") + ", oracle " +
                                   (oracle ? "true" : "false"));
    }
  }

 private:
  AgreementReport& report_;
  std::chrono::steady_clock::time_point start_;
};

AgreementReport empty_report(const FieldSpec& field, std::size_t rows, std::size_t cols) {
  AgreementReport r;
  r.field = field;
  r.rows = rows;
  r.cols = cols;
  return r;
}

Pencil random_rank_one(const FieldSpec& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> digit(0, field.modulus() - 1);
  const auto nonzero_vector = [&](std::size_t n) {
    std::vector<Scalar> v;
    for (;;) {
      v.clear();
      bool any = false;
      for (std::size_t i = 0; i < n; ++i) {
        v.emplace_back(field, digit(rng));
        any = any || !v.back().is_zero();
      }
      if (any) return v;
    }
  };
  // u v(s)^T or u(s) v^T with a constant side of the matching length.
  const bool mirrored = std::bernoulli_distribution(0.5)(rng);
  const std::vector<Scalar> constant = nonzero_vector(mirrored ? cols : rows);
  const std::vector<Scalar> linear = nonzero_vector(2 * (mirrored ? rows : cols));
  const std::size_t L = linear.size() / 2;
  ScalarMatrix a0 = zero_matrix(field, rows, cols), a1 = a0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const std::size_t c = mirrored ? j : i, l = mirrored ? i : j;
      a0(i, j) = constant[c] * linear[l];
      a1(i, j) = constant[c] * linear[L + l];
    }
  return Pencil(field, std::move(a0), std::move(a1));
}

// Entries nonzero with probability 1/4, favoring low ranks and negative verdicts.
Pencil random_sparse(const FieldSpec& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> digit(1, field.modulus() - 1);
  std::bernoulli_distribution nonzero(0.25);
  ScalarMatrix a0 = zero_matrix(field, rows, cols), a1 = a0;
  for (ScalarMatrix* m : {&a0, &a1})
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (nonzero(rng)) (*m)(i, j) = Scalar(field, digit(rng));
  return Pencil(field, std::move(a0), std::move(a1));
}

}  // namespace

AgreementReport exhaustive_agreement(const FieldSpec& field, std::size_t rows, std::size_t cols) {
  BruteForceOracle oracle(field, rows, cols);
  const std::uint64_t N = pencil_count(field, rows, cols);
  if (N > kExhaustiveLimit)
    throw ShapeTooLarge(std::to_string(N) + " pencils exceed the exhaustive limit of " +
                        std::to_string(kExhaustiveLimit));
  AgreementReport report = empty_report(field, rows, cols);
  Recorder rec(report);
  std::vector<Pencil> all;
  std::vector<int> ids;
  for (std::uint64_t code = 0; code < N; ++code) {
    all.push_back(decode_pencil(field, rows, cols, code));
    ids.push_back(oracle.class_id(all.back()));
  }
  std::unordered_map<std::uint64_t, DecisionOutcome> memo;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      const std::uint64_t key = static_cast<std::uint64_t>(ids[i]) << 32 | static_cast<std::uint32_t>(ids[j]);
      auto it = memo.find(key);
      if (it == memo.end())
        it = memo.emplace(key, decide_invariants(oracle.invariants_of(ids[i]), oracle.invariants_of(ids[j]))).first;
      rec.add(all[i], all[j], it->second, oracle.decide(all[i], all[j]).exists);
    }
  rec.finish();
  return report;
}

AgreementReport sampled_agreement(const FieldSpec& field, std::size_t rows, std::size_t cols, std::uint64_t trials,
                                  std::uint64_t seed) {
  BruteForceOracle oracle(field, rows, cols);
  AgreementReport report = empty_report(field, rows, cols);
  Recorder rec(report);
  std::mt19937_64 rng(seed);
  const std::uint64_t N = pencil_count(field, rows, cols);
  std::uniform_int_distribution<std::uint64_t> code(0, N - 1);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Pencil a = t % 3 == 2 ? random_sparse(field, rows, cols, rng) : decode_pencil(field, rows, cols, code(rng));
    Pencil b = t % 3 == 0   ? decode_pencil(field, rows, cols, code(rng))
               : t % 3 == 1 ? random_equivalent(a + random_rank_one(field, rows, cols, rng), rng())
                            : random_sparse(field, rows, cols, rng);
    const int ia = oracle.class_id(a), ib = oracle.class_id(b);
    const DecisionOutcome d = decide_invariants(oracle.invariants_of(ia), oracle.invariants_of(ib));
    rec.add(a, b, d, oracle.decide(a, b).exists);
  }
  rec.finish();
  return report;
}

}  // namespace rankone
