#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rankone/invariants.hpp"

namespace rankone {

/// Pencil file: {"field":{"kind":"prime","p":2}|{"kind":"rational"},"rows":R,
/// "cols":C,"A0":[[..]],"A1":[[..]]}. Entries are integers or "num/den"
/// strings; prime-field entries are reduced mod p. Throws ParseError.
[[nodiscard]] Pencil parse_pencil(const std::string& text);
/// Canonical form of the same schema.
[[nodiscard]] std::string write_pencil(const Pencil& p);

/// Invariant record: field, rows, cols, rank, hif as [{"t_exp":k,"finite":[ascending coeffs]}],
/// col_min, row_min. Throws ParseError.
[[nodiscard]] KroneckerInvariants parse_invariants(const std::string& text);
[[nodiscard]] std::string write_invariants(const KroneckerInvariants& inv);

/// Runs one command (args exclude the program name), printing JSON to `out`
/// and diagnostics to `err`. Exit codes: 0 affirmative or success,
/// 1 negative verdict, 2 input or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankone
