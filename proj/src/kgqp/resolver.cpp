#include "askg/kgqp/resolver.hpp"

#include <algorithm>
#include <set>

#include "askg/error.hpp"

namespace askg::kgqp {

CandidateTripleSet make_ctkg(std::vector<rdf::Triple> triples) {
  CandidateTripleSet c;
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
  c.triples = std::move(triples);
  for (const auto& t : c.triples) {
    const std::string s = rdf::node_key(t.subject.value);
    ++c.entity_counts[s];
    if (const auto* o = rdf::as_iri(t.object)) {
      const std::string ok = rdf::node_key(o->value);
      if (ok != s) ++c.entity_counts[ok];
    }
  }
  return c;
}

CandidateTripleSet resolve_query(const Grounder& grounder, const CompoundQuery& query,
                                 const RelaxationDictionary& dict, std::size_t max_depth) {
  if (query.size() == 0) throw PreconditionError("cannot resolve an empty query");

  std::set<std::vector<TriplePattern>> seen{query.patterns};
  std::vector<RelaxedQuery> frontier{RelaxedQuery{query, 0, {}}};
  for (std::size_t depth = 0; depth <= max_depth; ++depth) {
    std::vector<rdf::Triple> triples;
    std::vector<RelaxedQuery> producers;
    for (const auto& rq : frontier) {
      auto match = rdf::match_compound(grounder.graph(), grounder.ground(rq.query));
      if (match.empty()) continue;
      triples.insert(triples.end(), match.triples.begin(), match.triples.end());
      producers.push_back(rq);
    }
    if (!producers.empty()) {
      CandidateTripleSet c = make_ctkg(std::move(triples));
      c.producing_queries = std::move(producers);
      c.depth = depth;
      return c;
    }
    if (depth == max_depth) break;

    std::vector<RelaxedQuery> next;
    for (const auto& rq : frontier) {
      for (auto& r : relax_set(rq, dict)) {
        if (seen.insert(r.query.patterns).second) next.push_back(std::move(r));
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  CandidateTripleSet exhausted;
  exhausted.depth = max_depth + 1;
  return exhausted;
}

CandidateTripleSet resolve_query(const rdf::KnowledgeGraph& graph, const CompoundQuery& query,
                                 const RelaxationDictionary& dict, std::size_t max_depth) {
  return resolve_query(Grounder(graph), query, dict, max_depth);
}

}  // namespace askg::kgqp
