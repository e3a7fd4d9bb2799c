#include "rankone/invariants.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "rankone/errors.hpp"

namespace rankone {

namespace {

bool better_pivot(const UniPoly& cand, const UniPoly& best) {
  if (best.is_zero()) return true;
  if (cand.degree() != best.degree()) return cand.degree() < best.degree();
  return cand.height() < best.height();
}

// Moves a minimal pivot of the trailing submatrix to (k, k); false if it is zero.
bool bring_pivot(PolyMatrix& m, std::size_t k) {
  std::size_t bi = k, bj = k;
  UniPoly best(m(k, k).field());
  bool unit_found = false;
  for (std::size_t i = k; i < m.rows() && !unit_found; ++i)
    for (std::size_t j = k; j < m.cols(); ++j) {
      const UniPoly& e = m(i, j);
      if (e.is_zero() || !better_pivot(e, best)) continue;
      best = e;
      bi = i;
      bj = j;
      unit_found = best.degree() == 0 && best.height() <= 2;
      if (unit_found) break;
    }
  if (best.is_zero()) return false;
  m.swap_rows(k, bi);
  m.swap_cols(k, bj);
  return true;
}

// Eliminates below and to the right of the pivot; false if a remainder survived.
bool clear_cross(PolyMatrix& m, std::size_t k) {
  bool clean = true;
  const UniPoly& piv = m(k, k);
  for (std::size_t i = k + 1; i < m.rows(); ++i) {
    if (m(i, k).is_zero()) continue;
    const UniPoly q = divmod(m(i, k), piv).first;
    for (std::size_t j = k; j < m.cols(); ++j)
      if (!m(k, j).is_zero()) m(i, j) -= q * m(k, j);
    if (!m(i, k).is_zero()) clean = false;
  }
  for (std::size_t j = k + 1; j < m.cols(); ++j) {
    if (m(k, j).is_zero()) continue;
    const UniPoly q = divmod(m(k, j), piv).first;
    for (std::size_t i = k; i < m.rows(); ++i)
      if (!m(i, k).is_zero()) m(i, j) -= q * m(i, k);
    if (!m(k, j).is_zero()) clean = false;
  }
  return clean;
}

std::vector<UniPoly> smith_of_pencil(const Pencil& p) { return smith_chain(p.to_poly_matrix()); }

// Convolution matrix of degree-k vectors: block (j, j) = A0, block (j+1, j) = A1.
ScalarMatrix convolution(const Pencil& p, std::size_t k) {
  const std::size_t P = p.rows(), Q = p.cols();
  ScalarMatrix c = zero_matrix(p.field(), (k + 2) * P, (k + 1) * Q);
  for (std::size_t b = 0; b <= k; ++b)
    for (std::size_t i = 0; i < P; ++i)
      for (std::size_t j = 0; j < Q; ++j) {
        c(b * P + i, b * Q + j) = p.a0()(i, j);
        c((b + 1) * P + i, b * Q + j) = p.a1()(i, j);
      }
  return c;
}

Partition column_indices(const Pencil& p, int n) {
  const int want = static_cast<int>(p.cols()) - n;
  std::vector<std::int64_t> parts;
  if (want <= 0) return Partition{};
  if (p.rows() == 0) return Partition(std::vector<std::int64_t>(static_cast<std::size_t>(want), 0));
  std::int64_t prev_nullity = 0, prev_count = 0;
  for (std::size_t k = 0; static_cast<int>(parts.size()) < want; ++k) {
    const ScalarMatrix c = convolution(p, k);
    const auto nullity = static_cast<std::int64_t>(c.cols() - rank(c));
    const std::int64_t count = nullity - prev_nullity;  // #{c_i <= k}
    for (std::int64_t r = prev_count; r < count; ++r) parts.push_back(static_cast<std::int64_t>(k));
    prev_nullity = nullity;
    prev_count = count;
    if (static_cast<int>(k) > n + 1) throw InconsistentInvariants("minimal index search did not terminate");
  }
  std::reverse(parts.begin(), parts.end());
  return Partition(std::move(parts));
}

// sI - C(gamma) for monic gamma, rows/cols offset by `at`.
void put_companion(ScalarMatrix& a0, ScalarMatrix& a1, std::size_t at, const UniPoly& gamma) {
  const auto d = static_cast<std::size_t>(gamma.degree());
  const FieldSpec& field = gamma.field();
  for (std::size_t i = 0; i < d; ++i) {
    a1(at + i, at + i) = Scalar::one(field);
    if (i + 1 < d) a0(at + i + 1, at + i) = -Scalar::one(field);
    a0(at + i, at + d - 1) = gamma.coeff(i);
  }
}

ScalarMatrix draw_invertible(const FieldSpec& field, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    ScalarMatrix m = zero_matrix(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (field.is_prime()) {
          std::uniform_int_distribution<std::uint32_t> dist(0, field.modulus() - 1);
          m(i, j) = Scalar(field, static_cast<std::int64_t>(dist(rng)));
        } else {
          std::uniform_int_distribution<int> dist(-3, 3);
          m(i, j) = Scalar(field, static_cast<std::int64_t>(dist(rng)));
        }
      }
    if (rank(m) == n) return m;
  }
}

}  // namespace

std::vector<UniPoly> smith_chain(PolyMatrix m) {
  std::vector<UniPoly> diag;
  const std::size_t steps = std::min(m.rows(), m.cols());
  for (std::size_t k = 0; k < steps; ++k) {
    if (!bring_pivot(m, k)) break;
    for (;;) {
      if (!clear_cross(m, k)) {
        bring_pivot(m, k);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = k + 1; i < m.rows() && divisible; ++i)
        for (std::size_t j = k + 1; j < m.cols(); ++j)
          if (!m(i, j).is_zero() && !divides(m(k, k), m(i, j))) {
            for (std::size_t c = k; c < m.cols(); ++c) m(k, c) += m(i, c);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    diag.push_back(m(k, k).monic());
  }
  return diag;
}

std::vector<UniPoly> smith_invariant_factors(const Pencil& p, SmithVariable variable) {
  return smith_of_pencil(variable == SmithVariable::s ? p : p.dual());
}

int normal_rank(const Pencil& p) { return static_cast<int>(smith_of_pencil(p).size()); }

Partition minimal_indices(const Pencil& p, Side side) {
  const Pencil q = side == Side::column ? p : p.transposed();
  return column_indices(q, normal_rank(q));
}

KroneckerInvariants kronecker_invariants(const Pencil& p) {
  const std::vector<UniPoly> fin = smith_invariant_factors(p, SmithVariable::s);
  const std::vector<UniPoly> inf = smith_invariant_factors(p, SmithVariable::dual);
  KroneckerInvariants inv;
  inv.field = p.field();
  inv.rows = static_cast<int>(p.rows());
  inv.cols = static_cast<int>(p.cols());
  inv.rank = static_cast<int>(fin.size());
  if (inf.size() != fin.size()) throw InconsistentInvariants("pencil and dual pencil ranks differ");
  for (std::size_t i = 0; i < fin.size(); ++i) inv.hif.emplace_back(inf[i].valuation(), fin[i]);
  inv.col_min = column_indices(p, inv.rank);
  inv.row_min = column_indices(p.transposed(), inv.rank);
  return inv;
}

KroneckerInvariants KroneckerInvariants::transposed() const {
  KroneckerInvariants t = *this;
  std::swap(t.rows, t.cols);
  std::swap(t.col_min, t.row_min);
  return t;
}

int KroneckerInvariants::hif_degree() const {
  int d = 0;
  for (const HomPoly& h : hif) d += h.degree();
  return d;
}

void KroneckerInvariants::validate() const {
  if (rows < 0 || cols < 0 || rank < 0 || rank > std::min(rows, cols))
    throw InconsistentInvariants("rank out of range for the shape");
  if (static_cast<int>(hif.size()) != rank) throw InconsistentInvariants("hif length differs from rank");
  if (col_min.size() != cols - rank) throw InconsistentInvariants("column index count differs from cols - rank");
  if (row_min.size() != rows - rank) throw InconsistentInvariants("row index count differs from rows - rank");
  for (std::size_t i = 0; i < hif.size(); ++i) {
    if (hif[i].is_zero()) throw InconsistentInvariants("zero homogeneous invariant factor");
    if (!(hif[i].field() == field)) throw InconsistentInvariants("invariant factor over a different field");
    if (i > 0 && !divides(hif[i - 1], hif[i])) throw InconsistentInvariants("hif is not a divisibility chain");
  }
  if (hif_degree() + col_min.sum() + row_min.sum() != rank)
    throw InconsistentInvariants("degree sum differs from the rank");
}

std::string KroneckerInvariants::key() const {
  std::string k = std::to_string(rows) + "x" + std::to_string(cols) + "|" + std::to_string(rank) + "|";
  for (const HomPoly& h : hif) {
    k += std::to_string(h.t_exp()) + ":";
    for (const Scalar& c : h.finite().coeffs()) k += c.to_string() + ",";
    k += ";";
  }
  return k + "|" + col_min.to_string() + "|" + row_min.to_string();
}

bool strictly_equivalent(const Pencil& a, const Pencil& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("pencils over different fields");
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return kronecker_invariants(a) == kronecker_invariants(b);
}

Pencil realize(const KroneckerInvariants& inv) {
  inv.validate();
  const FieldSpec& field = inv.field;
  ScalarMatrix a0 = zero_matrix(field, static_cast<std::size_t>(inv.rows), static_cast<std::size_t>(inv.cols));
  ScalarMatrix a1 = a0;
  const Scalar one = Scalar::one(field);
  std::size_t r = 0, c = 0;
  for (const HomPoly& h : inv.hif) {
    const UniPoly& gamma = h.finite();
    put_companion(a0, a1, r, gamma);  // square block, r == c along the diagonal part
    r += static_cast<std::size_t>(gamma.degree());
    const auto k = static_cast<std::size_t>(h.t_exp());
    for (std::size_t i = 0; i < k; ++i) {
      a0(r + i, r + i) = one;
      if (i + 1 < k) a1(r + i, r + i + 1) = one;
    }
    r += k;
  }
  c = r;
  for (const std::int64_t e : inv.col_min.parts()) {
    const auto eps = static_cast<std::size_t>(e);
    for (std::size_t i = 0; i < eps; ++i) {
      a1(r + i, c + i) = one;
      a0(r + i, c + i + 1) = one;
    }
    r += eps;
    c += eps + 1;
  }
  for (const std::int64_t e : inv.row_min.parts()) {
    const auto eta = static_cast<std::size_t>(e);
    for (std::size_t i = 0; i < eta; ++i) {
      a1(r + i, c + i) = one;
      a0(r + i + 1, c + i) = one;
    }
    r += eta + 1;
    c += eta;
  }
  return Pencil(field, std::move(a0), std::move(a1));
}

ScalarMatrix random_invertible(const FieldSpec& field, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return draw_invertible(field, n, rng);
}

Pencil random_equivalent(const Pencil& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const ScalarMatrix q = draw_invertible(p.field(), p.rows(), rng);
  const ScalarMatrix r = draw_invertible(p.field(), p.cols(), rng);
  return p.transformed(q, r);
}

}  // namespace rankone
