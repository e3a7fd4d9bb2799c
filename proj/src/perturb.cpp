#include "rankone/perturb.hpp"

#include <algorithm>

#include "rankone/factor.hpp"

namespace rankone {

namespace {

FieldSpec chain_field(const std::vector<HomPoly>& a, const std::vector<HomPoly>& b) {
  if (!a.empty()) return a.front().field();
  if (!b.empty()) return b.front().field();
  return FieldSpec::rational();
}

std::int64_t sum_of(const Partition& p) { return p.sum(); }

// All subset sums of `parts`, as a membership table over 0..sum.
std::vector<bool> subset_sums(const std::vector<int>& parts) {
  int total = 0;
  for (const int d : parts) total += d;
  std::vector<bool> reach(static_cast<std::size_t>(total) + 1, false);
  reach[0] = true;
  int hi = 0;
  for (const int d : parts) {
    for (int s = hi; s >= 0; --s)
      if (reach[static_cast<std::size_t>(s)]) reach[static_cast<std::size_t>(s + d)] = true;
    hi += d;
  }
  return reach;
}

std::vector<bool> minkowski(const std::vector<bool>& a, const std::vector<bool>& b) {
  std::vector<bool> out(a.size() + b.size() - 1, false);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j)
        if (b[j]) out[i + j] = true;
  return out;
}

bool column_one_step(const Partition& g, const Partition& d) {
  return g.size() == d.size() + 1 && one_step_majorized(g, d);
}

}  // namespace

Pencil RankOneForm::product(const FieldSpec& field) const {
  std::vector<std::vector<UniPoly>> rows;
  for (const UniPoly& l : left) {
    std::vector<UniPoly> row;
    for (const UniPoly& r : right) row.push_back(l * r);
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return Pencil(field, 0, right.size());
  return Pencil::from_polys(field, rows);
}

RankOneClass rank_one_class(const KroneckerInvariants& inv) {
  if (inv.rank != 1) throw NotRankOne("normal rank is " + std::to_string(inv.rank));
  const HomPoly& h = inv.hif.front();
  if (h.degree() == 1) return h.t_exp() == 1 ? RankOneClass::infinite_eigenvalue : RankOneClass::finite_eigenvalue;
  if (inv.col_min.sum() == 1) return RankOneClass::column_index;
  return RankOneClass::row_index;
}

RankOneForm decompose_rank_one(const Pencil& p) {
  RankOneForm form;
  form.source = rank_one_class(kronecker_invariants(p));
  const bool constant_right =
      form.source == RankOneClass::finite_eigenvalue || form.source == RankOneClass::row_index;
  form.kind = constant_right ? RankOneForm::Kind::const_right : RankOneForm::Kind::const_left;

  // Factor w = u v(s)^T with u constant; the constant-right case works on P^T.
  const Pencil w = constant_right ? p.transposed() : p;
  const FieldSpec& field = p.field();
  std::size_t pivot_row = w.rows();
  Scalar scale = Scalar::one(field);
  std::vector<Scalar> column;
  for (const ScalarMatrix* m : {&w.a0(), &w.a1()}) {
    for (std::size_t j = 0; j < w.cols() && column.empty(); ++j)
      for (std::size_t i = 0; i < w.rows(); ++i)
        if (!(*m)(i, j).is_zero()) {
          pivot_row = i;
          scale = (*m)(i, j);
          for (std::size_t r = 0; r < w.rows(); ++r) column.push_back((*m)(r, j) / scale);
          break;
        }
    if (!column.empty()) break;
  }
  std::vector<UniPoly> constant_side, poly_side;
  for (const Scalar& x : column) constant_side.push_back(UniPoly::constant(x));
  for (std::size_t j = 0; j < w.cols(); ++j)
    poly_side.push_back(UniPoly(field, std::vector<Scalar>{w.a0()(pivot_row, j), w.a1()(pivot_row, j)}));
  if (constant_right) {
    form.left = std::move(poly_side);
    form.right = std::move(constant_side);
  } else {
    form.left = std::move(constant_side);
    form.right = std::move(poly_side);
  }
  return form;
}

bool interlacing_ok(const std::vector<HomPoly>& phi, const std::vector<HomPoly>& psi, int n) {
  const FieldSpec field = chain_field(phi, psi);
  for (int i = 1; i <= n; ++i) {
    const HomPoly mid = chain_at(phi, i, field);
    if (!divides(chain_at(psi, i - 1, field), mid) || !divides(mid, chain_at(psi, i + 1, field))) return false;
  }
  return true;
}

std::optional<std::vector<std::int64_t>> pi_chain_degree_sums(const std::vector<HomPoly>& phi,
                                                              const std::vector<HomPoly>& psi, int n,
                                                              std::uint64_t seed) {
  const FieldSpec field = chain_field(phi, psi);
  std::vector<HomPoly> lo, hi;
  bool unbounded = false;
  for (int i = 1; i <= n; ++i) {
    lo.push_back(lcm(chain_at(phi, i, field), chain_at(psi, i, field)));
    hi.push_back(gcd(chain_at(phi, i + 1, field), chain_at(psi, i + 1, field)));
    if (!divides(lo.back(), hi.back())) return std::nullopt;
    unbounded = unbounded || hi.back().is_zero();
  }
  if (unbounded) throw UnboundedChain("gcd(phi_{i+1}, psi_{i+1}) vanishes, degrees are unbounded");

  std::int64_t base = 0;
  std::vector<bool> reach{true};
  for (std::size_t i = 0; i < lo.size(); ++i) {
    base += lo[i].degree();
    const HomPoly delta = quotient(hi[i], lo[i]);
    std::vector<int> degrees(static_cast<std::size_t>(delta.t_exp()), 1);
    if (delta.finite().degree() > 0) {
      const std::vector<int> fin = irreducible_degrees(factorize(delta.finite(), seed));
      degrees.insert(degrees.end(), fin.begin(), fin.end());
    }
    reach = minkowski(reach, subset_sums(degrees));
  }
  std::vector<std::int64_t> out;
  for (std::size_t s = 0; s < reach.size(); ++s)
    if (reach[s]) out.push_back(base + static_cast<std::int64_t>(s));
  return out;
}

bool closed_field_interval_ok(const std::vector<HomPoly>& phi, const std::vector<HomPoly>& psi, int n,
                              std::int64_t x) {
  const FieldSpec field = chain_field(phi, psi);
  std::int64_t lower = 0, upper = 0;
  bool open_above = false;
  for (int i = 1; i <= n; ++i) {
    const HomPoly l = lcm(chain_at(phi, i, field), chain_at(psi, i, field));
    const HomPoly g = gcd(chain_at(phi, i + 1, field), chain_at(psi, i + 1, field));
    if (l.is_zero()) return false;
    lower += l.degree();
    if (g.is_zero())
      open_above = true;
    else
      upper += g.degree();
  }
  return lower <= x && (open_above || x <= upper);
}

std::string to_string(Route r) {
  switch (r) {
    case Route::equivalent: return "equivalent";
    case Route::case1: return "case1";
    case Route::case2: return "case2";
    case Route::case3: return "case3";
    case Route::case4a: return "case4a";
    case Route::case4b: return "case4b";
    case Route::case4c: return "case4c";
    case Route::case4d: return "case4d";
    case Route::none: return "none";
  }
  return "none";
}

namespace {

void require_comparable(const KroneckerInvariants& a, const KroneckerInvariants& b) {
  if (!(a.field == b.field)) throw FieldMismatch("invariant records over different fields");
  if (a.rows != b.rows || a.cols != b.cols)
    throw ShapeMismatch("pencils of shapes " + std::to_string(a.rows) + "x" + std::to_string(a.cols) + " and " +
                        std::to_string(b.rows) + "x" + std::to_string(b.cols));
}

// Cases 2 and 3 share their shape: x, y are the partitions that differ, z the
// common partition on the other side.
void unequal_one_side(const KroneckerInvariants& a, const KroneckerInvariants& b, const Partition& x,
                      const Partition& y, const Partition& z, bool barred, DecisionOutcome& out) {
  Evidence& ev = out.evidence;
  const int n = ev.n;
  if (x.size() != y.size()) throw InconsistentInvariants("equal partitions on one side force equal ranks");
  const FieldSpec& field = a.field;
  std::int64_t sum_gcd = 0, sum_lcm = 0;
  for (int i = 1; i <= n - 1; ++i) sum_gcd += gcd(chain_at(a.hif, i + 1, field), chain_at(b.hif, i + 1, field)).degree();
  for (int i = 1; i <= n; ++i) sum_lcm += lcm(chain_at(a.hif, i, field), chain_at(b.hif, i, field)).degree();
  const std::int64_t g = n - 1 - sum_gcd - z.sum();
  const std::int64_t t = n - sum_lcm - z.sum();
  const LastDifference ld = ell_f_fprime(x, y);
  const std::int64_t top = std::max(x.at(ld.f), y.at(ld.f_prime));
  std::int64_t sum_min = 0, sum_max = 0;
  for (int i = 1; i <= x.size(); ++i) {
    sum_min += std::min(x.at(i), y.at(i));
    sum_max += std::max(x.at(i), y.at(i));
  }
  ev.difference = ld;
  ev.lower_bound = sum_min + top;
  ev.upper_bound = sum_max - top;
  if (barred) {
    ev.G_bar = g;
    ev.T_bar = t;
  } else {
    ev.G = g;
    ev.T = t;
  }
  const bool by_g = g <= *ev.lower_bound;
  const bool by_t = t >= *ev.upper_bound;
  out.exists = *ev.interlacing && (by_g || by_t);
  ev.detail = by_g ? "G bound holds" : by_t ? "T bound holds" : "neither bound holds";
}

}  // namespace

DecisionOutcome theorem_decide(const KroneckerInvariants& a, const KroneckerInvariants& b, std::uint64_t seed) {
  require_comparable(a, b);
  if (a == b) throw SameInvariants("the pencils are strictly equivalent");
  DecisionOutcome out;
  Evidence& ev = out.evidence;
  const int n = std::min(a.rank, b.rank);
  ev.n = n;
  const Partition &c = a.col_min, &d = b.col_min, &u = a.row_min, &v = b.row_min;

  if (c == d && u == v) {
    ev.dispatched_case = 1;
    ev.interlacing = interlacing_ok(a.hif, b.hif, n);
    out.exists = *ev.interlacing;
    out.route = out.exists ? Route::case1 : Route::none;
    return out;
  }
  if (u == v) {
    ev.dispatched_case = 2;
    ev.interlacing = interlacing_ok(a.hif, b.hif, n);
    unequal_one_side(a, b, c, d, u, false, out);
    out.route = out.exists ? Route::case2 : Route::none;
    return out;
  }
  if (c == d) {
    ev.dispatched_case = 3;
    ev.interlacing = interlacing_ok(a.hif, b.hif, n);
    unequal_one_side(a, b, u, v, c, true, out);
    out.route = out.exists ? Route::case3 : Route::none;
    return out;
  }

  ev.dispatched_case = 4;
  const bool forward = column_one_step(c, d) && column_one_step(u, v);
  const bool backward = column_one_step(d, c) && column_one_step(v, u);
  const std::int64_t target_cv = n - sum_of(c) - sum_of(v);
  const std::int64_t target_du = n - sum_of(d) - sum_of(u);
  if (!forward && !backward) {
    ev.detail = "no one-step majorization between the index partitions";
    return out;
  }
  ev.degree_sums = pi_chain_degree_sums(a.hif, b.hif, n, seed);
  ev.chain_exists = ev.degree_sums.has_value();
  if (!ev.degree_sums) {
    ev.detail = "no chain lcm(phi_i, psi_i) | pi_i | gcd(phi_{i+1}, psi_{i+1})";
    return out;
  }
  const auto achievable = [&](std::int64_t target) {
    return target >= 0 && std::binary_search(ev.degree_sums->begin(), ev.degree_sums->end(), target);
  };
  const struct {
    bool maj;
    std::int64_t target;
    Route route;
  } options[] = {{forward, target_cv, Route::case4a},
                 {backward, target_du, Route::case4b},
                 {forward, target_du, Route::case4c},
                 {backward, target_cv, Route::case4d}};
  for (const auto& o : options) {
    if (o.maj && achievable(o.target)) {
      out.exists = true;
      out.route = o.route;
      ev.target = o.target;
      return out;
    }
  }
  ev.target = forward ? target_cv : target_du;
  ev.detail = "no admissible target degree sum is achievable";
  return out;
}

DecisionOutcome decide_invariants(const KroneckerInvariants& a, const KroneckerInvariants& b, std::uint64_t seed) {
  require_comparable(a, b);
  if (!(a == b)) return theorem_decide(a, b, seed);
  DecisionOutcome out;
  out.evidence.n = a.rank;
  if (a.rank == 0) {
    out.evidence.detail = "A + P has rank 1 for every rank-one P";
  } else if (a.rows == 1 && a.cols == 1) {
    out.exists = a.field.is_rational() || a.field.modulus() >= 3;
    out.evidence.detail = out.exists ? "P = (c - 1) A with c != 0, 1" : "A + P = c B forces P = 0 over GF(2)";
  } else {
    out.exists = true;
    out.evidence.detail = "P adds a nonzero row or column of A to another one";
  }
  out.route = out.exists ? Route::equivalent : Route::none;
  return out;
}

DecisionOutcome decide(const Pencil& a, const Pencil& b, std::uint64_t seed) {
  if (!(a.field() == b.field())) throw FieldMismatch("pencils over different fields");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("pencils of different shapes");
  return decide_invariants(kronecker_invariants(a), kronecker_invariants(b), seed);
}

}  // namespace rankone
