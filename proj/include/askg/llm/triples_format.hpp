#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "askg/kgqp/query.hpp"

namespace askg::llm {

/// One "subject | predicate | object" pattern per line. Fields are trimmed;
/// "?" is a wildcard and "?name" a variable. Blank lines and a leading
/// "- " or "* " list marker are ignored.
///
/// Throws ParseError (1-based line index) when a line does not have exactly
/// three non-empty fields or has no ground term.
std::vector<kgqp::TriplePattern> parse_triples_response(std::string_view text);

/// Inverse of parse_triples_response. Throws PreconditionError when a
/// ground term is empty, starts with '?', or contains '|' or a line break.
std::string format_triples(const std::vector<kgqp::TriplePattern>& patterns);

}  // namespace askg::llm
