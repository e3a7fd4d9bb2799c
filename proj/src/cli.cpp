#include "rankone/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "rankone/oracle.hpp"
#include "rankone/perturb.hpp"
#include "rankone/selftest.hpp"

namespace rankone {

namespace {

using json = nlohmann::ordered_json;

constexpr int kAffirmative = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

// ---- reading ---------------------------------------------------------------

const json& member(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::int64_t integer(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::size_t count(const json& j, const char* what) {
  const std::int64_t v = integer(j, what);
  if (v < 0) throw ParseError(std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

FieldSpec read_field(const json& j) {
  const json& kind = member(j, "kind");
  if (kind == "rational") return FieldSpec::rational();
  if (kind == "prime") {
    const std::int64_t p = integer(member(j, "p"), "p");
    if (p < 2 || !is_prime_number(static_cast<std::uint64_t>(p)))
      throw ParseError("p = " + std::to_string(p) + " is not a prime");
    return FieldSpec::prime(static_cast<std::uint64_t>(p));
  }
  throw ParseError("field kind must be \"prime\" or \"rational\"");
}

mpz_class big_integer(const std::string& text, const std::string& whole) {
  mpz_class v;
  const std::size_t start = !text.empty() && (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (text.size() == start || text.find_first_not_of("0123456789", start) != std::string::npos ||
      v.set_str(text[0] == '+' ? text.substr(1) : text, 10) != 0)
    throw ParseError("malformed entry \"" + whole + "\"");
  return v;
}

Scalar read_scalar(const FieldSpec& field, const json& j) {
  if (j.is_number_integer()) return Scalar(field, j.get<std::int64_t>());
  if (!j.is_string()) throw ParseError("entries must be integers or \"num/den\" strings");
  const std::string text = j.get<std::string>();
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) return Scalar(field, big_integer(text, text));
  const mpz_class num = big_integer(text.substr(0, slash), text), den = big_integer(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in \"" + text + "\"");
  if (field.is_prime() && den % field.modulus() == 0)
    throw ParseError("denominator of \"" + text + "\" vanishes mod " + std::to_string(field.modulus()));
  return Scalar(field, num, den);
}

ScalarMatrix read_matrix(const FieldSpec& field, const json& j, std::size_t rows, std::size_t cols, const char* name) {
  if (!j.is_array() || j.size() != rows) throw ParseError(std::string(name) + " must have " + std::to_string(rows) + " rows");
  ScalarMatrix m = zero_matrix(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw ParseError(std::string(name) + " row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = read_scalar(field, j[i][k]);
  }
  return m;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Partition read_partition(const json& j, const char* name) {
  if (!j.is_array()) throw ParseError(std::string(name) + " must be an array");
  std::vector<std::int64_t> parts;
  for (const json& x : j) {
    const std::int64_t v = integer(x, name);
    if (v < 0) throw ParseError(std::string(name) + " entries must be nonnegative");
    parts.push_back(v);
  }
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- writing ---------------------------------------------------------------

json scalar_json(const Scalar& x) {
  if (x.field().is_prime()) return x.residue();
  const mpq_class& q = x.rational();
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return x.to_string();
}

json field_json(const FieldSpec& f) {
  if (f.is_rational()) return json{{"kind", "rational"}};
  return json{{"kind", "prime"}, {"p", f.modulus()}};
}

json matrix_json(const ScalarMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json pencil_json(const Pencil& p) {
  return json{{"field", field_json(p.field())},
              {"rows", p.rows()},
              {"cols", p.cols()},
              {"A0", matrix_json(p.a0())},
              {"A1", matrix_json(p.a1())}};
}

json invariants_json(const KroneckerInvariants& inv) {
  json hif = json::array();
  for (const HomPoly& h : inv.hif) {
    json finite = json::array();
    for (const Scalar& c : h.finite().coeffs()) finite.push_back(scalar_json(c));
    hif.push_back(json{{"t_exp", h.t_exp()}, {"finite", std::move(finite)}});
  }
  return json{{"field", field_json(inv.field)},
              {"rows", inv.rows},
              {"cols", inv.cols},
              {"rank", inv.rank},
              {"hif", std::move(hif)},
              {"col_min", inv.col_min.parts()},
              {"row_min", inv.row_min.parts()}};
}

std::string paper_route(const DecisionOutcome& d) {
  switch (d.evidence.dispatched_case) {
    case 0: return "equivalent pencils";
    case 1: return "theorem case 1";
    case 2: return "theorem case 2";
    case 3: return "theorem case 3";
    default: break;
  }
  switch (d.route) {
    case Route::case4a: return "theorem case 4(a)";
    case Route::case4b: return "theorem case 4(b)";
    case Route::case4c: return "theorem case 4(c)";
    case Route::case4d: return "theorem case 4(d)";
    default: return "theorem case 4";
  }
}

json evidence_json(const Evidence& ev) {
  json j{{"dispatched_case", ev.dispatched_case}, {"n", ev.n}};
  if (ev.interlacing) j["interlacing"] = *ev.interlacing;
  if (ev.difference) j["difference"] = {{"ell", ev.difference->ell}, {"f", ev.difference->f}, {"f_prime", ev.difference->f_prime}};
  if (ev.G) j["G"] = *ev.G;
  if (ev.T) j["T"] = *ev.T;
  if (ev.G_bar) j["G_bar"] = *ev.G_bar;
  if (ev.T_bar) j["T_bar"] = *ev.T_bar;
  if (ev.lower_bound) j["lower_bound"] = *ev.lower_bound;
  if (ev.upper_bound) j["upper_bound"] = *ev.upper_bound;
  if (ev.chain_exists) j["chain_exists"] = *ev.chain_exists;
  if (ev.degree_sums) j["degree_sums"] = *ev.degree_sums;
  if (ev.target) j["target"] = *ev.target;
  if (!ev.detail.empty()) j["detail"] = ev.detail;
  return j;
}

json report_json(const AgreementReport& r) {
  return json{{"field", field_json(r.field)},
              {"shape", std::to_string(r.rows) + "x" + std::to_string(r.cols)},
              {"pairs", r.pairs},
              {"agreements", r.agreements},
              {"oracle_positives", r.positives},
              {"routes", r.routes},
              {"mismatches", r.mismatches},
              {"seconds", r.seconds},
              {"ok", r.ok()}};
}

// ---- commands --------------------------------------------------------------

std::pair<Pencil, Pencil> load_pair(const std::string& f, const std::string& g) {
  Pencil a = parse_pencil(read_file(f)), b = parse_pencil(read_file(g));
  if (!(a.field() == b.field())) throw FieldMismatch("pencils over " + a.field().to_string() + " and " + b.field().to_string());
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("pencils of different shapes");
  return {std::move(a), std::move(b)};
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_invariants(const std::string& path, std::ostream& out) {
  emit(out, invariants_json(kronecker_invariants(parse_pencil(read_file(path)))));
  return kAffirmative;
}

int cmd_equiv(const std::string& f, const std::string& g, std::ostream& out) {
  const auto [a, b] = load_pair(f, g);
  const bool eq = strictly_equivalent(a, b);
  emit(out, json{{"equivalent", eq}});
  return eq ? kAffirmative : kNegative;
}

int cmd_decide(const std::string& f, const std::string& g, bool witness, std::uint64_t seed, std::ostream& out) {
  const auto [a, b] = load_pair(f, g);
  const DecisionOutcome d = decide(a, b, seed);
  json j{{"exists", d.exists}, {"route", to_string(d.route)}, {"paper_route", paper_route(d)},
         {"evidence", evidence_json(d.evidence)}};
  if (witness) {
    if (!a.field().is_prime()) {
      j["witness"] = nullptr;
      j["witness_note"] = "witness search needs a prime field";
    } else {
      const BruteForceResult r = brute_force_decide(a, b);
      j["witness"] = r.witness ? pencil_json(*r.witness) : json(nullptr);
      if (r.exists != d.exists) j["witness_note"] = "oracle disagrees with the decision";
    }
  }
  emit(out, j);
  return d.exists ? kAffirmative : kNegative;
}

int cmd_oracle(const std::string& f, const std::string& g, std::ostream& out) {
  const auto [a, b] = load_pair(f, g);
  const BruteForceOracle probe(a.field(), a.rows(), a.cols());
  const BruteForceResult r = brute_force_decide(a, b);
  emit(out, json{{"exists", r.exists},
                 {"witness", r.witness ? pencil_json(*r.witness) : json(nullptr)},
                 {"candidates", probe.candidates().size()}});
  return r.exists ? kAffirmative : kNegative;
}

int cmd_realize(const std::string& path, std::ostream& out) {
  emit(out, pencil_json(realize(parse_invariants(read_file(path)))));
  return kAffirmative;
}

std::pair<std::size_t, std::size_t> parse_shape(const std::string& text) {
  const std::size_t x = text.find('x');
  if (x == std::string::npos) throw ParseError("shape must look like PxQ");
  try {
    std::size_t used = 0;
    const unsigned long p = std::stoul(text.substr(0, x), &used);
    if (used != x) throw ParseError("shape must look like PxQ");
    const std::string rest = text.substr(x + 1);
    const unsigned long q = std::stoul(rest, &used);
    if (used != rest.size() || p == 0 || q == 0) throw ParseError("shape must look like PxQ with P, Q >= 1");
    return {p, q};
  } catch (const std::logic_error&) {
    throw ParseError("shape must look like PxQ");
  }
}

int cmd_selftest(const std::string& shape, std::uint64_t p, bool exhaustive, std::uint64_t trials, std::uint64_t seed,
                 std::ostream& out) {
  const auto [rows, cols] = parse_shape(shape);
  if (!is_prime_number(p)) throw ParseError("--field must be a prime");
  const FieldSpec field = FieldSpec::prime(p);
  const AgreementReport r =
      exhaustive ? exhaustive_agreement(field, rows, cols) : sampled_agreement(field, rows, cols, trials, seed);
  json j = report_json(r);
  j["mode"] = exhaustive ? "exhaustive" : "sampled";
  if (!exhaustive) j["seed"] = seed;
  emit(out, j);
  return r.ok() ? kAffirmative : kNegative;
}

}  // namespace

Pencil parse_pencil(const std::string& text) {
  const json j = parse_json(text);
  const FieldSpec field = read_field(member(j, "field"));
  const std::size_t rows = count(member(j, "rows"), "rows"), cols = count(member(j, "cols"), "cols");
  ScalarMatrix a0 = read_matrix(field, member(j, "A0"), rows, cols, "A0");
  ScalarMatrix a1 = read_matrix(field, member(j, "A1"), rows, cols, "A1");
  return Pencil(field, std::move(a0), std::move(a1));
}

std::string write_pencil(const Pencil& p) { return pencil_json(p).dump(2) + "\n"; }

KroneckerInvariants parse_invariants(const std::string& text) {
  const json j = parse_json(text);
  KroneckerInvariants inv;
  inv.field = read_field(member(j, "field"));
  inv.rows = static_cast<int>(count(member(j, "rows"), "rows"));
  inv.cols = static_cast<int>(count(member(j, "cols"), "cols"));
  inv.rank = static_cast<int>(count(member(j, "rank"), "rank"));
  const json& hif = member(j, "hif");
  if (!hif.is_array()) throw ParseError("hif must be an array");
  for (const json& h : hif) {
    const std::int64_t t = integer(member(h, "t_exp"), "t_exp");
    if (t < 0) throw ParseError("t_exp must be nonnegative");
    const json& fin = member(h, "finite");
    if (!fin.is_array() || fin.empty()) throw ParseError("finite must be a nonempty coefficient array");
    std::vector<Scalar> coeffs;
    for (const json& c : fin) coeffs.push_back(read_scalar(inv.field, c));
    const UniPoly f(inv.field, std::move(coeffs));
    if (f.is_zero()) throw ParseError("finite part must be nonzero");
    inv.hif.emplace_back(static_cast<int>(t), f);
  }
  inv.col_min = read_partition(member(j, "col_min"), "col_min");
  inv.row_min = read_partition(member(j, "row_min"), "row_min");
  return inv;
}

std::string write_invariants(const KroneckerInvariants& inv) { return invariants_json(inv).dump(2) + "\n"; }

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kronecker invariants and rank-one perturbation decisions for matrix pencils", "rankone"};
  app.require_subcommand(1);

  std::string f, g, shape;
  std::uint64_t seed = 0, trials = 2000, field = 2;
  bool witness = false, exhaustive = false;

  CLI::App* inv = app.add_subcommand("invariants", "Print the Kronecker invariants of a pencil file");
  inv->add_option("F", f, "pencil file")->required();
  CLI::App* eq = app.add_subcommand("equiv", "Strict equivalence of two pencil files");
  eq->add_option("F", f, "pencil file")->required();
  eq->add_option("G", g, "pencil file")->required();
  CLI::App* dec = app.add_subcommand("decide", "Whether a rank-one P with F + P equivalent to G exists");
  dec->add_option("F", f, "pencil file")->required();
  dec->add_option("G", g, "pencil file")->required();
  dec->add_flag("--witness", witness, "search for a witness P (prime fields)");
  dec->add_option("--seed", seed, "factorization seed");
  CLI::App* orc = app.add_subcommand("oracle", "Brute-force verdict over a small prime field");
  orc->add_option("F", f, "pencil file")->required();
  orc->add_option("G", g, "pencil file")->required();
  CLI::App* rea = app.add_subcommand("realize", "Canonical pencil of an invariants file");
  rea->add_option("INV", f, "invariants file")->required();
  CLI::App* st = app.add_subcommand("selftest", "Compare decide with the oracle on a grid");
  st->add_option("--shape", shape, "PxQ")->required();
  st->add_option("--field", field, "prime p")->required();
  CLI::Option* ex = st->add_flag("--exhaustive", exhaustive, "all ordered pairs of the shape");
  st->add_option("--trials", trials, "number of sampled pairs")->excludes(ex);
  st->add_option("--seed", seed, "sampling seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (inv->parsed()) return cmd_invariants(f, out);
    if (eq->parsed()) return cmd_equiv(f, g, out);
    if (dec->parsed()) return cmd_decide(f, g, witness, seed, out);
    if (orc->parsed()) return cmd_oracle(f, g, out);
    if (rea->parsed()) return cmd_realize(f, out);
    return cmd_selftest(shape, field, exhaustive, trials, seed, out);
  } catch (const Error& e) {
    emit(err, json{{"error", e.what()}});
    return kInputError;
  } catch (const json::exception& e) {
    emit(err, json{{"error", e.what()}});
    return kInputError;
  }
}

}  // namespace rankone
