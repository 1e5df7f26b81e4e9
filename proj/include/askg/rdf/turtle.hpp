#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "askg/rdf/graph.hpp"

namespace askg::rdf {

/// prefix label -> namespace IRI
using PrefixMap = std::map<std::string, std::string, std::less<>>;

/// askg-data, askg-onto, rdf, rdfs and xsd.
const PrefixMap& default_prefixes();

/// Reads the Turtle subset used for scholarly graph exchange: @prefix and
/// PREFIX directives, IRIs and prefixed names, `a`, predicate lists (`;`),
/// object lists (`,`), string literals with `@lang` or `^^datatype`, and
/// bare integer/decimal/boolean literals. The default prefixes are
/// pre-bound. Blank nodes, collections, long strings and @base are
/// rejected.
///
/// Throws ParseError (with line) on syntax errors or an undeclared prefix.
std::vector<Triple> parse_turtle(std::string_view bytes, PrefixMap prefixes = default_prefixes());
KnowledgeGraph load_turtle(std::string_view bytes);

/// Canonical Turtle: the default prefix header, then one block per subject
/// in IRI order. Within a block rdf:type comes first (as `a`), remaining
/// predicates follow in IRI order and objects in term order.
std::string save_turtle(const KnowledgeGraph& graph);

/// Renders one term the way save_turtle does.
std::string turtle_term(const Term& term);

}  // namespace askg::rdf
