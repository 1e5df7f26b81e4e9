#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "askg/kgqp/context.hpp"
#include "askg/kgqp/ranking.hpp"
#include "askg/llm/gateway.hpp"
#include "askg/llm/prompts.hpp"

namespace askg::kgqp {

/// Lets the backend pick the candidates that best answer the question. The
/// prompt lists the first `limit` ranked entities with their CTKG triples;
/// the reply is read as candidate numbers, most relevant first. Numbers out
/// of range or repeated are ignored, and a reply naming none keeps the rank
/// order.
std::vector<RankedEntity> filter_candidates(std::string_view question,
                                            const std::vector<RankedEntity>& ranked,
                                            const CandidateTripleSet& ctkg, const llm::Gateway& gateway,
                                            const llm::TemplateSet& templates = llm::TemplateSet::defaults(),
                                            std::size_t limit = 5);

struct Answer {
  std::string text;
  std::vector<rdf::Iri> provenance;  // context paragraphs, prompt order
  std::string backend;
};

/// Prompts with the question and the context paragraph texts only.
/// Throws PreconditionError when `context` is empty; gateway errors pass
/// through.
Answer generate_answer(std::string_view question, const std::vector<ScoredParagraph>& context,
                       const llm::Gateway& gateway,
                       const llm::TemplateSet& templates = llm::TemplateSet::defaults());

}  // namespace askg::kgqp
