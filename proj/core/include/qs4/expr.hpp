#pragma once

// Expression grammar shared by the CLI, presentation files and tests.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('-' | '+') unary | power
//   power  := atom ('^' ('-')? integer | '^' '(' ('-')? integer ')')?
//   atom   := integer | identifier | '(' expr ')'
//
// Juxtaposition is rejected; products need an explicit '*'. Division is
// only by scalars. `X^-n` for a letter X uses the letter `X^-1` when the
// alphabet declares one.

#include <map>
#include <string>
#include <string_view>

#include "qs4/ncalg.hpp"

namespace qs4 {

struct ParseContext {
    const Alphabet* alphabet = nullptr;
    /// Named elements expanded on use (e.g. root vectors).
    std::map<std::string, NCPoly> macros;
    Mode mu_mode = Mode::special;
};

NCPoly parse_expr(std::string_view text, const ParseContext& ctx);

/// Closest candidate by edit distance, empty when nothing is near.
std::string suggest(const std::string& name, const std::vector<std::string>& candidates);

} // namespace qs4
