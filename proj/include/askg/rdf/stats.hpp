#pragma once

#include <cstddef>
#include <string>

#include "askg/rdf/graph.hpp"

namespace askg::rdf {

/// Graph construction metrics, one field per report row.
struct GraphStats {
  std::size_t papers = 0;
  std::size_t sections = 0;
  std::size_t paragraphs = 0;
  double average_words_per_paragraph = 0.0;
  std::size_t excerpts = 0;
  std::size_t linked_excerpts = 0;  // distinct excerpts that are a hasExcerpt object
  double linked_excerpt_percentage = 0.0;
  std::size_t has_excerpt_edges = 0;
  std::size_t relationship_types = 0;  // distinct predicates
  std::size_t entity_types = 0;        // distinct rdf:type objects
  std::size_t triples = 0;
  std::size_t entities = 0;  // distinct IRIs in subject or object position

  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

GraphStats graph_stats(const KnowledgeGraph& graph);

/// "Item<TAB>Value" lines using the construction-metrics row names.
std::string stats_to_text(const GraphStats& stats);
std::string stats_to_json(const GraphStats& stats);

}  // namespace askg::rdf
