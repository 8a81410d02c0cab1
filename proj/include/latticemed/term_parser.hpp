#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "latticemed/terms.hpp"

namespace latmed {

/// Grammar:
///   expr := term ('|' term)*
///   term := atom ('&' atom)*
///   atom := identifier | 'med(' expr ',' expr ',' expr ')'
///         | 'M' digit '(' expr-list ')' | '(' expr ')'
/// '&' binds tighter than '|'. M_k atoms expand to the join-of-meets form,
/// so the resulting AST contains only meets, joins and variables. Errors
/// carry 1-based offsets.
struct ParsedTerm {
  LatticeTerm term;
  std::vector<std::string> variables;  // first-appearance order
};

ParsedTerm parse_term(std::string_view source);

/// Re-parsing the printed form yields an identical AST.
std::string term_to_string(const LatticeTerm& term, const std::vector<std::string>& variables);

}  // namespace latmed
