#include "rankone/pencil.hpp"

#include <stdexcept>
#include <utility>

namespace rankone {

ScalarMatrix zero_matrix(const FieldSpec& field, std::size_t rows, std::size_t cols) {
  return ScalarMatrix(rows, cols, Scalar::zero(field));
}

ScalarMatrix identity_matrix(const FieldSpec& field, std::size_t n) {
  ScalarMatrix m = zero_matrix(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

ScalarMatrix multiply(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product with incompatible shapes");
  if (a.rows() == 0 || b.cols() == 0) return ScalarMatrix(a.rows(), b.cols(), Scalar::zero(FieldSpec::rational()));
  if (a.cols() == 0) throw DimensionMismatch("matrix product with an empty inner dimension");
  const FieldSpec field = a(0, 0).field();
  ScalarMatrix out = zero_matrix(field, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1, r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

std::size_t rank_mod_p(const ScalarMatrix& m, std::uint32_t p) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::uint64_t> a(R * C);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) a[i * C + j] = m(i, j).residue();
  std::size_t r = 0;
  for (std::size_t col = 0; col < C && r < R; ++col) {
    std::size_t piv = r;
    while (piv < R && a[piv * C + col] == 0) ++piv;
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(a[piv * C + j], a[r * C + j]);
    const std::uint64_t inv = inverse_mod(a[r * C + col], p);
    for (std::size_t i = r + 1; i < R; ++i) {
      const std::uint64_t factor = a[i * C + col] * inv % p;
      if (factor == 0) continue;
      for (std::size_t j = col; j < C; ++j) a[i * C + j] = (a[i * C + j] + (p - factor) * a[r * C + j]) % p;
    }
    ++r;
  }
  return r;
}

std::size_t rank_bareiss(const ScalarMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<mpz_class> a(R * C);
  for (std::size_t i = 0; i < R; ++i) {
    mpz_class den = 1;
    for (std::size_t j = 0; j < C; ++j)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
    for (std::size_t j = 0; j < C; ++j) {
      const mpq_class& q = m(i, j).rational();
      a[i * C + j] = q.get_num() * (den / q.get_den());
    }
  }
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < C && r < R; ++col) {
    std::size_t piv = r;
    while (piv < R && a[piv * C + col] == 0) ++piv;
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = 0; j < C; ++j) std::swap(a[piv * C + j], a[r * C + j]);
    const mpz_class pivot = a[r * C + col];
    for (std::size_t i = r + 1; i < R; ++i) {
      const mpz_class lead = a[i * C + col];
      for (std::size_t j = col; j < C; ++j) {
        a[i * C + j] = pivot * a[i * C + j] - lead * a[r * C + j];
        mpz_divexact(a[i * C + j].get_mpz_t(), a[i * C + j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = pivot;
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const ScalarMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  const FieldSpec& field = m(0, 0).field();
  return field.is_prime() ? rank_mod_p(m, field.modulus()) : rank_bareiss(m);
}

Pencil::Pencil(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), a0_(zero_matrix(field, rows, cols)), a1_(zero_matrix(field, rows, cols)) {}

Pencil::Pencil(FieldSpec field, ScalarMatrix a0, ScalarMatrix a1)
    : field_(field), a0_(std::move(a0)), a1_(std::move(a1)) {
  if (a0_.rows() != a1_.rows() || a0_.cols() != a1_.cols())
    throw DimensionMismatch("A0 and A1 must have the same shape");
  for (const ScalarMatrix* m : {&a0_, &a1_})
    for (std::size_t i = 0; i < m->rows(); ++i)
      for (std::size_t j = 0; j < m->cols(); ++j)
        if (!((*m)(i, j).field() == field_)) throw FieldMismatch("pencil entry outside " + field_.to_string());
}

Pencil Pencil::from_ints(FieldSpec field, const std::vector<std::vector<std::int64_t>>& a0,
                         const std::vector<std::vector<std::int64_t>>& a1) {
  const std::size_t rows = a0.size();
  const std::size_t cols = rows ? a0[0].size() : 0;
  if (a1.size() != rows) throw DimensionMismatch("A0 and A1 row counts differ");
  ScalarMatrix m0 = zero_matrix(field, rows, cols), m1 = zero_matrix(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (a0[i].size() != cols || a1[i].size() != cols) throw DimensionMismatch("ragged pencil rows");
    for (std::size_t j = 0; j < cols; ++j) {
      m0(i, j) = Scalar(field, a0[i][j]);
      m1(i, j) = Scalar(field, a1[i][j]);
    }
  }
  return Pencil(field, std::move(m0), std::move(m1));
}

Pencil Pencil::from_polys(FieldSpec field, const std::vector<std::vector<UniPoly>>& entries) {
  const std::size_t rows = entries.size();
  const std::size_t cols = rows ? entries[0].size() : 0;
  ScalarMatrix m0 = zero_matrix(field, rows, cols), m1 = zero_matrix(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (entries[i].size() != cols) throw DimensionMismatch("ragged pencil rows");
    for (std::size_t j = 0; j < cols; ++j) {
      const UniPoly& e = entries[i][j];
      if (e.degree() > 1) throw std::invalid_argument("pencil entries have degree at most 1");
      m0(i, j) = e.coeff(0);
      m1(i, j) = e.coeff(1);
    }
  }
  return Pencil(field, std::move(m0), std::move(m1));
}

UniPoly Pencil::entry(std::size_t i, std::size_t j) const {
  return UniPoly(field_, std::vector<Scalar>{a0_(i, j), a1_(i, j)});
}

PolyMatrix Pencil::to_poly_matrix() const {
  PolyMatrix m(rows(), cols(), UniPoly(field_));
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) m(i, j) = entry(i, j);
  return m;
}

bool Pencil::is_zero() const {
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if (!a0_(i, j).is_zero() || !a1_(i, j).is_zero()) return false;
  return true;
}

Pencil Pencil::transposed() const {
  Pencil t(field_, cols(), rows());
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) {
      t.a0_(j, i) = a0_(i, j);
      t.a1_(j, i) = a1_(i, j);
    }
  return t;
}

Pencil Pencil::dual() const { return Pencil(field_, a1_, a0_); }

Pencil Pencil::transformed(const ScalarMatrix& q, const ScalarMatrix& r) const {
  if (q.rows() != rows() || q.cols() != rows() || r.rows() != cols() || r.cols() != cols())
    throw DimensionMismatch("transformation matrices do not match the pencil shape");
  if (rows() == 0 || cols() == 0) return *this;
  return Pencil(field_, multiply(multiply(q, a0_), r), multiply(multiply(q, a1_), r));
}

namespace {
Pencil combine(const Pencil& a, const Pencil& b, bool subtract) {
  if (!(a.field() == b.field())) throw FieldMismatch("pencils over different fields");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("pencil shapes differ");
  ScalarMatrix m0 = a.a0(), m1 = a.a1();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (subtract) {
        m0(i, j) -= b.a0()(i, j);
        m1(i, j) -= b.a1()(i, j);
      } else {
        m0(i, j) += b.a0()(i, j);
        m1(i, j) += b.a1()(i, j);
      }
    }
  return Pencil(a.field(), std::move(m0), std::move(m1));
}
}  // namespace

Pencil operator+(const Pencil& a, const Pencil& b) { return combine(a, b, false); }
Pencil operator-(const Pencil& a, const Pencil& b) { return combine(a, b, true); }

std::string Pencil::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < cols(); ++j) out += (j ? ", " : "") + entry(i, j).to_string();
  }
  return out + "]";
}

std::uint64_t pencil_count(const FieldSpec& field, std::size_t rows, std::size_t cols) {
  if (!field.is_prime()) throw UnsupportedField("pencil enumeration needs a prime field");
  std::uint64_t n = 1;
  const std::uint64_t p = field.modulus();
  for (std::size_t k = 0; k < 2 * rows * cols; ++k) {
    if (n > UINT64_MAX / p) throw ShapeTooLarge("pencil space does not fit in 64 bits");
    n *= p;
  }
  return n;
}

std::uint64_t encode_pencil(const Pencil& pen) {
  (void)pencil_count(pen.field(), pen.rows(), pen.cols());
  const std::uint64_t p = pen.field().modulus();
  std::uint64_t code = 0;
  for (const ScalarMatrix* m : {&pen.a1(), &pen.a0()})
    for (std::size_t i = m->rows(); i-- > 0;)
      for (std::size_t j = m->cols(); j-- > 0;) code = code * p + (*m)(i, j).residue();
  return code;
}

Pencil decode_pencil(const FieldSpec& field, std::size_t rows, std::size_t cols, std::uint64_t code) {
  (void)pencil_count(field, rows, cols);
  const std::uint64_t p = field.modulus();
  Pencil out(field, rows, cols);
  ScalarMatrix m0 = zero_matrix(field, rows, cols), m1 = zero_matrix(field, rows, cols);
  for (ScalarMatrix* m : {&m0, &m1})
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        (*m)(i, j) = Scalar(field, static_cast<std::int64_t>(code % p));
        code /= p;
      }
  return Pencil(field, std::move(m0), std::move(m1));
}

}  // namespace rankone
