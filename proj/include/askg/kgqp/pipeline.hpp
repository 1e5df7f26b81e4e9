#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "askg/embed/embedder.hpp"
#include "askg/kgqp/answer.hpp"
#include "askg/kgqp/lot.hpp"
#include "askg/kgqp/ranking.hpp"
#include "askg/kgqp/relaxation.hpp"
#include "askg/kgqp/resolver.hpp"

namespace askg::kgqp {

struct PipelineOptions {
  std::size_t top_n = 10;
  std::size_t diverse_k = 5;
  std::size_t max_depth = 2;
  std::size_t top_entities = 5;     // ranked entities offered to the filter step
  RelaxationDictionary dictionary;  // added to the per-query default dictionary
};

struct QueryResult {
  std::string question;
  LotExtraction lot;
  CandidateTripleSet ctkg;
  std::vector<RankedEntity> ranked;
  std::vector<RankedEntity> selected;  // after the backend's filter step
  std::vector<std::string> keywords;
  std::vector<ScoredParagraph> context;
  bool answered = false;  // false when no paragraph matched the keywords
  Answer answer;
};

/// LOT extraction, exact or relaxed matching, entity ranking and filtering,
/// keyword and diversity based paragraph selection, then an answer drawn
/// from the selected paragraphs only.
QueryResult answer_question(const rdf::KnowledgeGraph& graph, std::string_view question,
                            const llm::Gateway& gateway, const embed::Embedder& embedder,
                            const PipelineOptions& options = {},
                            const llm::TemplateSet& templates = llm::TemplateSet::defaults());

/// The full trace as JSON; contains no timing, so stub runs are
/// byte-identical.
std::string provenance_json(const QueryResult& result);

/// Answer followed by a short human-readable trace.
std::string result_text(const QueryResult& result);

}  // namespace askg::kgqp
