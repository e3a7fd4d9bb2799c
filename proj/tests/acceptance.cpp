// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>

#include "brute_majorize.hpp"
#include "rankone/cli.hpp"
#include "rankone/completion.hpp"
#include "rankone/majorize.hpp"
#include "rankone/oracle.hpp"
#include "rankone/perturb.hpp"
#include "rankone/selftest.hpp"
#include "test_util.hpp"

using namespace rankone;
using namespace rankone::testing;

namespace {

const FieldSpec F2 = FieldSpec::prime(2);
const std::string kData = RANKONE_TEST_DATA;

struct Verdict {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double max_seconds, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > max_seconds) {
    v.pass = false;
    v.detail += " (over the " + std::to_string(max_seconds) + " s budget)";
  }
  failures += !v.pass;
  std::printf("%s %d %s: %s [%.3f s]\n", v.pass ? "PASS" : "FAIL", id, title, v.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string count_line(std::uint64_t ok, std::uint64_t total, const char* what) {
  return std::to_string(ok) + "/" + std::to_string(total) + " " + what;
}

Pencil stack(const Pencil& top, const Pencil& bottom) {
  const std::size_t R = top.rows() + bottom.rows(), C = top.cols();
  ScalarMatrix a0 = zero_matrix(top.field(), R, C), a1 = a0;
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) {
      const Pencil& src = i < top.rows() ? top : bottom;
      const std::size_t r = i < top.rows() ? i : i - top.rows();
      a0(i, j) = src.a0()(r, j);
      a1(i, j) = src.a1()(r, j);
    }
  return Pencil(top.field(), std::move(a0), std::move(a1));
}

Pencil first_rows(const Pencil& p, std::size_t rows) {
  ScalarMatrix a0 = zero_matrix(p.field(), rows, p.cols()), a1 = a0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) {
      a0(i, j) = p.a0()(i, j);
      a1(i, j) = p.a1()(i, j);
    }
  return Pencil(p.field(), std::move(a0), std::move(a1));
}

// ---- criteria --------------------------------------------------------------

Verdict build_g_example() {
  const Partition a{8, 6, 5, 5, 5, 3, 1};
  const Partition want50{17, 8, 6, 5, 5, 5, 3, 1}, want34{5, 5, 5, 5, 5, 5, 3, 1}, want5{1, 1, 1, 1, 1, 0, 0, 0};
  const Partition g50 = build_g_with_sum(50, a), g34 = build_g_with_sum(34, a), g5 = build_g_with_sum(5, a);
  const bool ok = g50 == want50 && g34 == want34 && g5 == want5;
  return {ok, "S=50 -> " + g50.to_string() + ", S=34 -> " + g34.to_string() + ", S=5 -> " + g5.to_string()};
}

std::pair<std::vector<HomPoly>, std::vector<HomPoly>> worked_chains(const FieldSpec& f) {
  const HomPoly one = HomPoly::one(f), q(0, poly(f, {1, 0, 1}));
  std::vector<HomPoly> omega(5, one), psi(5, one);
  omega.push_back(q);
  psi.push_back(q);
  psi.push_back(q);
  return {omega, psi};
}

std::string set_string(const std::optional<std::vector<std::int64_t>>& v) {
  if (!v) return "none";
  std::string s = "{";
  for (std::size_t i = 0; i < v->size(); ++i) s += (i ? "," : "") + std::to_string((*v)[i]);
  return s + "}";
}

Verdict pi_chain_example() {
  const auto [o5, p5] = worked_chains(FieldSpec::prime(5));
  const auto [o3, p3] = worked_chains(FieldSpec::prime(3));
  const auto s5 = pi_chain_degree_sums(o5, p5, 6), s3 = pi_chain_degree_sums(o3, p3, 6);
  const bool interval = closed_field_interval_ok(o5, p5, 6, 3);
  const bool ok = s5 == std::vector<std::int64_t>{2, 3, 4} && s3 == std::vector<std::int64_t>{2, 4} && interval;
  return {ok, "GF(5) " + set_string(s5) + ", GF(3) " + set_string(s3) + ", interval(x=3) " +
                  (interval ? "true" : "false")};
}

Verdict report_verdict(const std::vector<AgreementReport>& reports) {
  bool ok = true;
  std::string detail;
  for (const AgreementReport& r : reports) {
    ok = ok && r.ok();
    if (!detail.empty()) detail += "; ";
    detail += r.field.to_string() + " " + std::to_string(r.rows) + "x" + std::to_string(r.cols) + " " +
              count_line(r.agreements, r.pairs, "agree") + " (" + std::to_string(r.positives) + " positive)";
    if (!r.mismatches.empty()) detail += " first mismatch: " + r.mismatches.front();
  }
  return {ok, detail};
}

Verdict exhaustive_gf2() {
  const AgreementReport r = exhaustive_agreement(F2, 2, 2);
  Verdict v = report_verdict({r});
  v.pass = v.pass && r.pairs == 65536;
  std::string routes;
  for (const auto& [route, n] : r.routes) routes += " " + route + "=" + std::to_string(n);
  v.detail += ", routes:" + routes;
  return v;
}

Verdict sampled_grids() {
  const std::uint64_t trials = 6000;
  return report_verdict({sampled_agreement(F2, 2, 3, trials, 101), sampled_agreement(F2, 3, 2, trials, 102),
                         sampled_agreement(F2, 3, 3, trials, 103),
                         sampled_agreement(FieldSpec::prime(3), 2, 2, trials, 104),
                         sampled_agreement(FieldSpec::prime(3), 2, 3, trials, 105)});
}

Verdict invariant_suite() {
  std::mt19937_64 rng(2024);
  std::uint64_t checks = 0, passed = 0;
  const auto check = [&](bool ok) {
    ++checks;
    passed += ok;
  };
  for (const FieldSpec f : {FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5), FieldSpec::rational()})
    for (int trial = 0; trial < 500; ++trial) {
      std::uniform_int_distribution<std::size_t> rd(1, 4), cd(1, 5);
      const std::size_t r = rd(rng), c = cd(rng);
      const Pencil p = trial % 2 ? random_sparse_pencil(f, r, c, rng) : random_pencil(f, r, c, rng);
      const KroneckerInvariants inv = kronecker_invariants(p);
      check(inv.hif_degree() + inv.col_min.sum() + inv.row_min.sum() == inv.rank);
      check(kronecker_invariants(p.transposed()) == inv.transposed());
    }
  for (int k = 0; k < 50; ++k) {
    const FieldSpec f = k % 3 == 0 ? FieldSpec::rational() : FieldSpec::prime(k % 3 == 1 ? 2 : 3);
    const Pencil p = random_sparse_pencil(f, 2 + k % 3, 3, rng);
    const KroneckerInvariants inv = kronecker_invariants(p);
    for (std::uint64_t seed = 0; seed < 100; ++seed) check(kronecker_invariants(random_equivalent(p, seed)) == inv);
  }
  for (int trial = 0; trial < 200; ++trial) {
    const FieldSpec f = trial % 3 == 0 ? FieldSpec::rational() : FieldSpec::prime(trial % 3 == 1 ? 2 : 3);
    const KroneckerInvariants inv = random_record(f, rng);
    check(kronecker_invariants(realize(inv)) == inv);
  }
  return {passed == checks, count_line(passed, checks, "checks")};
}

Verdict majorization_grids() {
  std::uint64_t checks = 0, passed = 0;
  const auto check = [&](bool ok) {
    ++checks;
    passed += ok;
  };
  for (int m = 0; m <= 4; ++m)
    for (const Partition& d : partitions_up_to(7, m))
      for (const Partition& g : partitions_up_to(8, m + 1)) {
        const bool fast = one_step_majorized(g, d);
        const std::vector<std::int64_t> a{g.sum() - d.sum()};
        check(fast == one_step_by_definition(g, d) && fast == gen_majorized(g.parts(), d.parts(), a));
      }
  for (int m = 0; m <= 4; ++m)
    for (const Partition& a : partitions_up_to(10, m))
      for (std::int64_t S = 0; S <= 12; ++S) {
        const Partition g = build_g_with_sum(S, a);
        check(g.size() == m + 1 && g.sum() == S && one_step_majorized(g, a));
      }
  for (int m = 1; m <= 4; ++m)
    for (const Partition& a : partitions_up_to(10, m))
      for (std::int64_t E = 0; E <= 12; ++E) {
        bool brute = false;
        for (const Partition& e : partitions(E, m - 1)) brute = brute || one_step_majorized(a, e);
        const auto got = build_e_with_sum(E, a);
        check(got.has_value() == brute && (!got || (got->sum() == E && one_step_majorized(a, *got))));
      }
  for (int m = 1; m <= 4; ++m) {
    const std::vector<Partition> pool = partitions_up_to(8, m);
    for (const Partition& c : pool)
      for (const Partition& d : pool) {
        if (c == d) continue;
        for (std::int64_t S = 0; S <= 12; ++S) {
          bool brute_g = false, brute_e = false;
          for (const Partition& g : partitions(S, m + 1))
            brute_g = brute_g || (one_step_majorized(g, c) && one_step_majorized(g, d));
          for (const Partition& e : partitions(S, m - 1))
            brute_e = brute_e || (one_step_majorized(c, e) && one_step_majorized(d, e));
          const auto got = simultaneous_g(S, c, d);
          check(got.has_value() == brute_g &&
                (!got || (got->sum() == S && one_step_majorized(*got, c) && one_step_majorized(*got, d))));
          check(simultaneous_e_exists(S, c, d) == brute_e);
        }
      }
  }
  return {passed == checks, count_line(passed, checks, "grid points")};
}

Verdict completion_checks() {
  std::uint64_t family = 0, family_ok = 0;
  for (std::size_t R = 1; R <= 3; ++R)
    for (std::size_t C = 1; C <= 3; ++C) {
      std::unordered_map<std::uint64_t, KroneckerInvariants> inner_cache;
      const std::uint64_t N = pencil_count(F2, R, C);
      for (std::uint64_t code = 0; code < N; ++code) {
        const Pencil h = decode_pencil(F2, R, C, code);
        const Pencil h1 = first_rows(h, R - 1);
        const std::uint64_t key = R == 1 ? 0 : encode_pencil(h1);
        auto it = inner_cache.find(key);
        if (it == inner_cache.end()) it = inner_cache.emplace(key, kronecker_invariants(h1)).first;
        ++family;
        family_ok += row_completion_exists(it->second, kronecker_invariants(h));
      }
    }

  std::mt19937_64 rng(707);
  std::uint64_t sampled = 0, sampled_ok = 0, positives = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t R = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    const std::size_t C = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const Pencil inner = random_sparse_pencil(F2, R, C, rng);
    const Pencil outer = trial % 2 ? stack(random_sparse_pencil(F2, 1, C, rng), inner)
                                   : random_sparse_pencil(F2, R + 1, C, rng);
    const KroneckerInvariants out = kronecker_invariants(outer);
    const bool brute = brute_force_row_completion(inner, out);
    ++sampled;
    positives += brute;
    sampled_ok += row_completion_exists(kronecker_invariants(inner), out) == brute;
  }
  return {family_ok == family && sampled_ok == sampled,
          "delete-last-row " + count_line(family_ok, family, "true") + ", random " +
              count_line(sampled_ok, sampled, "agree") + " (" + std::to_string(positives) + " positive)"};
}

Verdict decomposition_checks() {
  std::uint64_t total = 0, ok = 0;
  for (const std::uint32_t p : {2u, 3u})
    for (const auto& [R, C] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}}) {
      const FieldSpec f = FieldSpec::prime(p);
      for (const Pencil& c : enumerate_rank_one(f, R, C)) {
        const RankOneForm form = decompose_rank_one(c);
        const RankOneClass cls = rank_one_class(kronecker_invariants(c));
        const bool right_constant = cls == RankOneClass::finite_eigenvalue || cls == RankOneClass::row_index;
        bool good = form.product(f) == c && form.source == cls &&
                    (form.kind == RankOneForm::Kind::const_right) == right_constant;
        for (const UniPoly& x : right_constant ? form.right : form.left) good = good && x.degree() <= 0;
        ++total;
        ok += good;
      }
    }
  return {ok == total, count_line(ok, total, "candidates reconstructed with matching tags")};
}

Verdict cli_checks() {
  using json = nlohmann::json;
  const auto run = [](std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return std::make_pair(code, out.str().empty() ? json() : json::parse(out.str()));
  };
  const auto file = [](const char* name) { return kData + "/" + name + ".json"; };
  std::string detail;
  bool ok = true;
  const auto expect = [&](bool cond, const std::string& what) {
    ok = ok && cond;
    detail += (detail.empty() ? "" : ", ") + what + (cond ? " ok" : " FAILED");
  };
  const auto [c1, j1] = run({"decide", file("diag_s_1"), file("diag_s_s1")});
  expect(c1 == 0 && j1["route"] == "case1" && j1["exists"] == true, "decide case1 exit 0");
  const auto [c2, j2] = run({"decide", file("diag_s_s"), file("diag_s1_s1")});
  expect(c2 == 1 && j2["exists"] == false, "decide negative exit 1");
  const auto [c3, j3] = run({"invariants", file("zero_2x2")});
  expect(c3 == 0 && j3["rank"] == 0 && j3["col_min"] == json::array({0, 0}) && j3["row_min"] == json::array({0, 0}),
         "invariants zero");
  const auto [c4, j4] = run({"selftest", "--shape", "2x2", "--field", "2", "--exhaustive"});
  expect(c4 == 0 && j4["ok"] == true, "selftest exhaustive exit 0");
  return {ok, detail};
}

}  // namespace

int main() {
  criterion(1, "build_g_with_sum worked example", 0.001, build_g_example);
  criterion(2, "pi-chain degree sums on the worked chains", 0.010, pi_chain_example);
  criterion(3, "exhaustive oracle agreement, GF(2) 2x2", 60, exhaustive_gf2);
  criterion(4, "sampled oracle agreement", 600, sampled_grids);
  criterion(5, "invariant suite", 600, invariant_suite);
  criterion(6, "majorization solvers vs exhaustive search", 120, majorization_grids);
  criterion(7, "completion predicates vs brute force", 600, completion_checks);
  criterion(8, "rank-one decomposition of every candidate", 600, decomposition_checks);
  criterion(9, "command-line interface", 600, cli_checks);
  std::printf("%s: %d of 9 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
