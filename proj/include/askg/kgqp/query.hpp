#pragma once

#include <compare>
#include <string>
#include <vector>

namespace askg::kgqp {

/// One position of a LOT triple: a ground phrase, a named variable
/// ("?x"), or the fuzzy wildcard "?".
struct QueryTerm {
  enum class Kind { kGround, kVariable, kWildcard };

  Kind kind = Kind::kWildcard;
  std::string value;  // ground text or variable name; empty for a wildcard

  static QueryTerm ground(std::string text) { return {Kind::kGround, std::move(text)}; }
  static QueryTerm variable(std::string name) { return {Kind::kVariable, std::move(name)}; }
  static QueryTerm wildcard() { return {}; }

  bool is_ground() const { return kind == Kind::kGround; }

  friend auto operator<=>(const QueryTerm&, const QueryTerm&) = default;
};

struct TriplePattern {
  QueryTerm subject;
  QueryTerm predicate;
  QueryTerm object;

  bool has_ground_term() const {
    return subject.is_ground() || predicate.is_ground() || object.is_ground();
  }

  friend auto operator<=>(const TriplePattern&, const TriplePattern&) = default;
};

/// Ordered conjunction T1 AND ... AND Tn.
struct CompoundQuery {
  std::vector<TriplePattern> patterns;

  std::size_t size() const { return patterns.size(); }

  friend auto operator<=>(const CompoundQuery&, const CompoundQuery&) = default;
};

/// "?" for a wildcard, "?name" for a variable, the text for a ground term.
std::string to_string(const QueryTerm& term);
/// "<s, p, o>"
std::string to_string(const TriplePattern& pattern);
/// Patterns joined by " AND ".
std::string to_string(const CompoundQuery& query);

/// Ground terms become entity keys ("PDF research proposals" ->
/// "pdf_research_proposals"); variables and wildcards are unchanged.
QueryTerm normalize(const QueryTerm& term);
TriplePattern normalize(const TriplePattern& pattern);

}  // namespace askg::kgqp
