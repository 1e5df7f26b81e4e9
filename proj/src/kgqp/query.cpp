#include "askg/kgqp/query.hpp"

#include "askg/text.hpp"

namespace askg::kgqp {

std::string to_string(const QueryTerm& term) {
  switch (term.kind) {
    case QueryTerm::Kind::kGround: return term.value;
    case QueryTerm::Kind::kVariable: return "?" + term.value;
    case QueryTerm::Kind::kWildcard: return "?";
  }
  return "?";
}

std::string to_string(const TriplePattern& p) {
  return "<" + to_string(p.subject) + ", " + to_string(p.predicate) + ", " + to_string(p.object) + ">";
}

std::string to_string(const CompoundQuery& q) {
  std::string out;
  for (const auto& p : q.patterns) {
    if (!out.empty()) out += " AND ";
    out += to_string(p);
  }
  return out;
}

QueryTerm normalize(const QueryTerm& term) {
  if (!term.is_ground()) return term;
  return QueryTerm::ground(text::entity_key(term.value));
}

TriplePattern normalize(const TriplePattern& p) {
  return {normalize(p.subject), normalize(p.predicate), normalize(p.object)};
}

}  // namespace askg::kgqp
