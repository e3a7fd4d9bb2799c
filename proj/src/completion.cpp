#include "rankone/completion.hpp"

#include "rankone/majorize.hpp"

namespace rankone {

namespace {

void check_records(const KroneckerInvariants& a, const KroneckerInvariants& b) {
  if (!(a.field == b.field)) throw FieldMismatch("invariant records over different fields");
  a.validate();
  b.validate();
}

// pi_i | pi1_i | pi_{i+1} for 1 <= i <= n, with the chain conventions.
bool interlaces(const std::vector<HomPoly>& outer, const std::vector<HomPoly>& inner, int n, const FieldSpec& field) {
  for (int i = 1; i <= n; ++i) {
    const HomPoly mid = chain_at(inner, i, field);
    if (!divides(chain_at(outer, i, field), mid) || !divides(mid, chain_at(outer, i + 1, field))) return false;
  }
  return true;
}

}  // namespace

bool row_completion_same_rank_exists(const KroneckerInvariants& inner, const KroneckerInvariants& outer) {
  check_records(inner, outer);
  const int n = inner.rank;
  if (outer.rank != n || outer.rows != inner.rows + 1 || outer.cols != inner.cols) return false;
  if (outer.row_min.positive_count() < inner.row_min.positive_count()) return false;
  if (!interlaces(outer.hif, inner.hif, n, inner.field)) return false;
  if (!one_step_majorized(outer.row_min, inner.row_min)) return false;
  return inner.col_min == outer.col_min;
}

bool row_completion_rank_up_exists(const KroneckerInvariants& inner, const KroneckerInvariants& outer) {
  check_records(inner, outer);
  const int n = inner.rank;
  if (outer.rank != n + 1 || outer.rows != inner.rows + 1 || outer.cols != inner.cols) return false;
  if (!interlaces(outer.hif, inner.hif, n, inner.field)) return false;
  if (!one_step_majorized(inner.col_min, outer.col_min)) return false;
  return inner.row_min == outer.row_min;
}

bool row_completion_exists(const KroneckerInvariants& inner, const KroneckerInvariants& outer) {
  return row_completion_same_rank_exists(inner, outer) || row_completion_rank_up_exists(inner, outer);
}

bool column_completion_same_rank_exists(const KroneckerInvariants& inner, const KroneckerInvariants& outer) {
  return row_completion_same_rank_exists(inner.transposed(), outer.transposed());
}

bool column_completion_rank_up_exists(const KroneckerInvariants& inner, const KroneckerInvariants& outer) {
  return row_completion_rank_up_exists(inner.transposed(), outer.transposed());
}

bool column_completion_exists(const KroneckerInvariants& inner, const KroneckerInvariants& outer) {
  return column_completion_same_rank_exists(inner, outer) || column_completion_rank_up_exists(inner, outer);
}

}  // namespace rankone
