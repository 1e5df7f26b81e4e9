#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "askg/rdf/graph.hpp"

namespace askg::rdf {

/// Matches anything and binds nothing.
struct Wildcard {
  friend auto operator<=>(const Wildcard&, const Wildcard&) = default;
};

struct Variable {
  std::string name;

  friend auto operator<=>(const Variable&, const Variable&) = default;
};

/// Ground position that accepts any term of a fixed set.
struct OneOf {
  std::vector<Term> terms;

  friend auto operator<=>(const OneOf&, const OneOf&) = default;
};

using PatternTerm = std::variant<Wildcard, Variable, Term, OneOf>;

struct TriplePattern {
  PatternTerm subject;
  PatternTerm predicate;
  PatternTerm object;

  friend auto operator<=>(const TriplePattern&, const TriplePattern&) = default;
};

/// Conjunction of triple patterns.
struct CompoundQuery {
  std::vector<TriplePattern> patterns;
};

using Binding = std::map<std::string, Term>;

struct MatchResult {
  /// Distinct variable bindings, sorted.
  std::vector<Binding> solutions;
  /// Union over solutions of the triples matching each instantiated
  /// pattern, in canonical order.
  std::vector<Triple> triples;

  bool empty() const { return solutions.empty(); }
};

/// Conjunctive evaluation: a solution binds every variable consistently
/// across all patterns; wildcards match without binding. A query without
/// variables yields one empty solution when every pattern matches.
MatchResult match_compound(const KnowledgeGraph& graph, const CompoundQuery& query);

/// Triples matching a single pattern under a (possibly partial) binding.
std::vector<Triple> match_pattern(const KnowledgeGraph& graph, const TriplePattern& pattern,
                                  const Binding& binding = {});

}  // namespace askg::rdf
