#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "askg/kgqp/resolver.hpp"

namespace askg::kgqp {

/// Entities are compared by key (rdf::node_key of their IRI). Only IRIs in
/// subject or object position count; literals and predicates do not.

/// Number of CTKG triples with `entity` as subject or object.
std::size_t frequency(const std::string& entity, const CandidateTripleSet& ctkg);

/// Share of the distinct entities co-occurring with `entity` in a CTKG
/// triple that belong to `query_entities`; 0 when there are none.
double purity(const std::string& entity, const CandidateTripleSet& ctkg,
              const std::set<std::string>& query_entities);

struct RankedEntity {
  std::string key;
  rdf::Iri iri;  // smallest IRI carrying the key
  std::size_t frequency = 0;
  double purity = 0.0;
  double score = 0.0;

  friend bool operator==(const RankedEntity&, const RankedEntity&) = default;
};

/// Every CTKG entity scored frequency x purity, best first; ties go to the
/// higher frequency, then the smaller key.
std::vector<RankedEntity> rank_candidates(const CandidateTripleSet& ctkg,
                                          const std::set<std::string>& query_entities);

}  // namespace askg::kgqp
