#pragma once

#include <string>
#include <vector>

#include "askg/rdf/graph.hpp"

namespace askg::rdf {

enum class MatchMode {
  kAny,  // label contains at least one name
  kAll,  // label contains every name
};

struct ParagraphHit {
  Iri paragraph;
  std::string label;

  friend bool operator==(const ParagraphHit&, const ParagraphHit&) = default;
};

/// Paragraph nodes (typed askg-onto:Paragraph) whose lowercased rdfs:label
/// contains the lowercased entity names. Results are in paragraph IRI
/// order. Throws PreconditionError when `names` is empty.
std::vector<ParagraphHit> paragraphs_containing(const KnowledgeGraph& graph,
                                                const std::vector<std::string>& names,
                                                MatchMode mode = MatchMode::kAny);

/// Sum over keywords of non-overlapping, case-insensitive occurrences.
std::size_t keyword_frequency(const std::string& label, const std::vector<std::string>& keywords);

/// The FILTER body equivalent to paragraphs_containing, one
/// CONTAINS(LCASE(STR(?label)), "name") test per name joined by || or &&.
/// It fills the {conditions} slot of the paragraph query template.
std::string paragraph_filter_conditions(const std::vector<std::string>& names,
                                        MatchMode mode = MatchMode::kAny);

}  // namespace askg::rdf
