#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "askg/kgqp/grounding.hpp"
#include "askg/kgqp/relaxation.hpp"

namespace askg::kgqp {

/// Candidate triples from the graph (CTKG) plus the queries that produced
/// them.
struct CandidateTripleSet {
  /// Distinct triples, canonical order.
  std::vector<rdf::Triple> triples;
  /// Every query of the winning depth whose match was non-empty.
  std::vector<RelaxedQuery> producing_queries;
  std::size_t depth = 0;
  /// Entity key -> number of triples holding it as subject or object.
  std::map<std::string, std::size_t> entity_counts;

  bool empty() const { return triples.empty(); }
  std::size_t size() const { return triples.size(); }
};

/// Builds a CTKG over explicit triples (depth 0, no producing query).
CandidateTripleSet make_ctkg(std::vector<rdf::Triple> triples);

/// Exact match first; while the result is empty, relaxes breadth-first one
/// edit per level, and at the first level where any query matches returns
/// the union of all their matches. When nothing matches up to `max_depth`
/// the result is empty with depth max_depth + 1.
CandidateTripleSet resolve_query(const Grounder& grounder, const CompoundQuery& query,
                                 const RelaxationDictionary& dict, std::size_t max_depth = 2);

CandidateTripleSet resolve_query(const rdf::KnowledgeGraph& graph, const CompoundQuery& query,
                                 const RelaxationDictionary& dict, std::size_t max_depth = 2);

}  // namespace askg::kgqp
