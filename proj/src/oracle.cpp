#include "rankone/oracle.hpp"

#include <utility>

namespace rankone {

namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;

std::uint64_t power(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

// Advances a base-p odometer; false once it wraps to all zeros.
bool next_digits(std::vector<std::uint32_t>& d, std::uint32_t p) {
  for (std::uint32_t& x : d) {
    if (++x < p) return true;
    x = 0;
  }
  return false;
}

// Nonzero vectors whose first nonzero entry is 1.
std::vector<std::vector<std::uint32_t>> projective_vectors(std::size_t n, std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> d(n, 0);
  while (next_digits(d, p)) {
    std::size_t first = 0;
    while (d[first] == 0) ++first;
    if (d[first] == 1) out.push_back(d);
  }
  return out;
}

Pencil pencil_from_digits(const FieldSpec& field, std::size_t rows, std::size_t cols,
                          const std::vector<std::uint32_t>& digits) {
  ScalarMatrix a0 = zero_matrix(field, rows, cols), a1 = zero_matrix(field, rows, cols);
  std::size_t k = 0;
  for (ScalarMatrix* m : {&a0, &a1})
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) (*m)(i, j) = Scalar(field, static_cast<std::int64_t>(digits[k++]));
  return Pencil(field, std::move(a0), std::move(a1));
}

std::vector<std::uint32_t> digits_of(const Pencil& p) {
  std::vector<std::uint32_t> d;
  d.reserve(2 * p.rows() * p.cols());
  for (const ScalarMatrix* m : {&p.a0(), &p.a1()})
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < p.cols(); ++j) d.push_back((*m)(i, j).residue());
  return d;
}

void check_limits(const FieldSpec& field, std::size_t rows, std::size_t cols, const OracleLimits& limits) {
  if (!field.is_prime()) throw UnsupportedField("brute force needs a prime field");
  if (field.modulus() > limits.max_prime)
    throw FieldTooLarge("GF(" + std::to_string(field.modulus()) + ") exceeds the oracle limit " +
                        std::to_string(limits.max_prime));
  if (rows * cols > limits.max_entries)
    throw ShapeTooLarge(std::to_string(rows) + "x" + std::to_string(cols) + " exceeds the oracle limit of " +
                        std::to_string(limits.max_entries) + " entries");
}

}  // namespace

CandidateSpace::CandidateSpace(FieldSpec field, std::size_t rows, std::size_t cols, OracleLimits limits)
    : field_(field), rows_(rows), cols_(cols) {
  check_limits(field, rows, cols, limits);
}

std::uint64_t CandidateSpace::size() const {
  const std::uint64_t p = field_.modulus();
  const auto proj = [&](std::size_t n) { return (power(p, n) - 1) / (p - 1); };
  return proj(rows_) * (power(p, 2 * cols_) - 1) + (power(p, 2 * rows_) - 1) * proj(cols_);
}

bool CandidateSpace::for_each(const std::function<bool(const std::vector<std::uint32_t>&)>& visit) const {
  const std::uint32_t p = field_.modulus();
  const std::size_t R = rows_, C = cols_;
  std::vector<std::uint32_t> out(2 * R * C);
  const auto mul = [p](std::uint32_t a, std::uint32_t b) {
    return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
  };

  // u v(s)^T: v holds v0 (first C digits) and v1.
  const auto us = projective_vectors(R, p);
  std::vector<std::uint32_t> v(2 * C, 0);
  while (next_digits(v, p))
    for (const auto& u : us) {
      for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j) {
          out[i * C + j] = mul(u[i], v[j]);
          out[R * C + i * C + j] = mul(u[i], v[C + j]);
        }
      if (visit(out)) return true;
    }

  // u(s) v^T: u holds u0 (first R digits) and u1.
  const auto vs = projective_vectors(C, p);
  std::vector<std::uint32_t> u(2 * R, 0);
  while (next_digits(u, p))
    for (const auto& w : vs) {
      for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j) {
          out[i * C + j] = mul(u[i], w[j]);
          out[R * C + i * C + j] = mul(u[R + i], w[j]);
        }
      if (visit(out)) return true;
    }
  return false;
}

std::vector<Pencil> enumerate_rank_one(const FieldSpec& field, std::size_t rows, std::size_t cols,
                                       OracleLimits limits) {
  const CandidateSpace space(field, rows, cols, limits);
  std::vector<Pencil> out;
  space.for_each([&](const std::vector<std::uint32_t>& d) {
    out.push_back(pencil_from_digits(field, rows, cols, d));
    return false;
  });
  return out;
}

BruteForceOracle::BruteForceOracle(FieldSpec field, std::size_t rows, std::size_t cols, OracleLimits limits)
    : space_(field, rows, cols, limits), pencil_count_(0) {
  try {
    pencil_count_ = pencil_count(field, rows, cols);
  } catch (const ShapeTooLarge&) {
    pencil_count_ = 0;  // not encodable in 64 bits; invariants are computed per query
  }
  if (pencil_count_ != 0 && pencil_count_ <= kDenseLimit) dense_.assign(pencil_count_, -1);
}

void BruteForceOracle::check_shape(const Pencil& p) const {
  if (!(p.field() == space_.field())) throw FieldMismatch("pencil over " + p.field().to_string());
  if (p.rows() != space_.rows() || p.cols() != space_.cols()) throw ShapeMismatch("pencil shape differs from the oracle's");
}

int BruteForceOracle::intern(const KroneckerInvariants& inv) {
  const auto [it, fresh] = by_key_.try_emplace(inv.key(), static_cast<std::int32_t>(classes_.size()));
  if (fresh) classes_.push_back(inv);
  return it->second;
}

int BruteForceOracle::class_id_of_code(std::uint64_t code) {
  if (!dense_.empty()) {
    std::int32_t& slot = dense_[code];
    if (slot < 0)
      slot = intern(kronecker_invariants(decode_pencil(space_.field(), space_.rows(), space_.cols(), code)));
    return slot;
  }
  const auto it = sparse_.find(code);
  if (it != sparse_.end()) return it->second;
  const int id = intern(kronecker_invariants(decode_pencil(space_.field(), space_.rows(), space_.cols(), code)));
  sparse_.emplace(code, id);
  return id;
}

int BruteForceOracle::class_id(const Pencil& p) {
  check_shape(p);
  if (pencil_count_ == 0) return intern(kronecker_invariants(p));
  return class_id_of_code(encode_pencil(p));
}

BruteForceResult BruteForceOracle::decide(const Pencil& a, const Pencil& b) {
  check_shape(a);
  check_shape(b);
  const int target = class_id(b);
  const std::vector<std::uint32_t> base = digits_of(a);
  const std::uint32_t p = space_.field().modulus();
  std::vector<std::uint32_t> sum(base.size());
  BruteForceResult result;
  space_.for_each([&](const std::vector<std::uint32_t>& cand) {
    for (std::size_t k = 0; k < base.size(); ++k) sum[k] = (base[k] + cand[k]) % p;
    int id;
    if (pencil_count_ != 0) {
      std::uint64_t code = 0;
      for (std::size_t k = sum.size(); k-- > 0;) code = code * p + sum[k];
      id = class_id_of_code(code);
    } else {
      id = intern(kronecker_invariants(pencil_from_digits(space_.field(), space_.rows(), space_.cols(), sum)));
    }
    if (id != target) return false;
    result = {true, pencil_from_digits(space_.field(), space_.rows(), space_.cols(), cand)};
    return true;
  });
  return result;
}

BruteForceResult brute_force_decide(const Pencil& a, const Pencil& b, OracleLimits limits) {
  if (!(a.field() == b.field())) throw FieldMismatch("pencils over different fields");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("pencils of different shapes");
  BruteForceOracle oracle(a.field(), a.rows(), a.cols(), limits);
  return oracle.decide(a, b);
}

bool brute_force_row_completion(const Pencil& inner, const KroneckerInvariants& target) {
  const FieldSpec& field = inner.field();
  if (!field.is_prime()) throw UnsupportedField("brute force needs a prime field");
  if (inner.cols() > 4) throw ShapeTooLarge("row completion search is limited to 4 columns");
  if (!(target.field == field)) throw FieldMismatch("target invariants over a different field");
  const std::size_t R = inner.rows() + 1, C = inner.cols();
  if (target.rows != static_cast<int>(R) || target.cols != static_cast<int>(C)) return false;
  if (target.rank > static_cast<int>(R) || target.rank < normal_rank(inner)) return false;

  ScalarMatrix a0 = zero_matrix(field, R, C), a1 = zero_matrix(field, R, C);
  for (std::size_t i = 0; i < inner.rows(); ++i)
    for (std::size_t j = 0; j < C; ++j) {
      a0(i + 1, j) = inner.a0()(i, j);
      a1(i + 1, j) = inner.a1()(i, j);
    }
  std::vector<std::uint32_t> h(2 * C, 0);
  do {
    for (std::size_t j = 0; j < C; ++j) {
      a0(0, j) = Scalar(field, static_cast<std::int64_t>(h[j]));
      a1(0, j) = Scalar(field, static_cast<std::int64_t>(h[C + j]));
    }
    if (kronecker_invariants(Pencil(field, a0, a1)) == target) return true;
  } while (next_digits(h, field.modulus()));
  return false;
}

}  // namespace rankone
