#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "askg/embed/embedder.hpp"
#include "askg/rdf/graph.hpp"
#include "askg/rdf/text_search.hpp"

namespace askg::kgqp {

struct ScoredParagraph {
  rdf::Iri paragraph;
  std::string text;
  std::size_t keyword_frequency = 0;
  std::string doc_id;  // from a Paper-<doc>-Paragraph-<id> IRI, else empty

  friend bool operator==(const ScoredParagraph&, const ScoredParagraph&) = default;
};

struct ContextOptions {
  std::size_t top_n = 10;     // keyword-frequency shortlist
  std::size_t diverse_k = 5;  // paragraphs kept from the shortlist
  rdf::MatchMode mode = rdf::MatchMode::kAny;
};

/// Paragraphs whose label mentions any of `names`, ranked by keyword
/// frequency over `keywords` (higher first, then IRI). The top_n shortlist
/// is reduced to diverse_k by farthest-point selection: start from the
/// highest-ranked paragraph, then repeatedly add the one whose smallest
/// cosine distance to the chosen set is largest (ties by frequency, then
/// IRI). Returned in selection order.
///
/// Throws PreconditionError when diverse_k > top_n or `names` is empty.
std::vector<ScoredParagraph> select_context(const rdf::KnowledgeGraph& graph,
                                            const std::vector<std::string>& names,
                                            const std::vector<std::string>& keywords,
                                            const embed::Embedder& embedder,
                                            const ContextOptions& options = {});

/// As above with keywords = names.
std::vector<ScoredParagraph> select_context(const rdf::KnowledgeGraph& graph,
                                            const std::vector<std::string>& names,
                                            const embed::Embedder& embedder,
                                            const ContextOptions& options = {});

/// Keyword-frequency ranking of all matching paragraphs, before any cut.
std::vector<ScoredParagraph> rank_paragraphs(const rdf::KnowledgeGraph& graph,
                                             const std::vector<std::string>& names,
                                             const std::vector<std::string>& keywords,
                                             rdf::MatchMode mode = rdf::MatchMode::kAny);

/// Farthest-point selection of min(k, size) items, in selection order.
std::vector<ScoredParagraph> diversify(const std::vector<ScoredParagraph>& ranked, std::size_t k,
                                       const embed::Embedder& embedder);

}  // namespace askg::kgqp
