#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "askg/domo/document_model.hpp"
#include "askg/rdf/graph.hpp"

namespace askg::ingest {

/// One JSON object per line with keys excerpt_id, in_sentence, mentions,
/// word_index_from, word_index_to and an optional label. Blank lines are
/// skipped. Throws ParseError (1-based line) on malformed JSON and
/// ValidationError on missing keys or from > to.
std::vector<domo::Excerpt> parse_excerpts_jsonl(std::string_view jsonl);

std::string excerpts_to_jsonl(const std::vector<domo::Excerpt>& excerpts);

/// Excerpt nodes of a graph in the exchange shape (typed askg-onto:Excerpt
/// with label, inSentence, mentions and word indices). `excerpt_id` is the
/// node's local name without the "Excerpt-" prefix; `mentions` is the
/// entity key when the object is an AcademicEntity IRI, else the full IRI.
std::vector<domo::Excerpt> excerpts_from_graph(const rdf::KnowledgeGraph& graph);

/// Sniffs the format: Turtle when the first non-blank character is not '{'.
std::vector<domo::Excerpt> load_excerpts(std::string_view bytes);

}  // namespace askg::ingest
