#include "askg/kgqp/context.hpp"

#include <algorithm>
#include <limits>

#include "askg/error.hpp"

namespace askg::kgqp {

namespace {

std::string doc_of(const rdf::Iri& paragraph) {
  const std::string_view local = rdf::local_name(paragraph.value);
  constexpr std::string_view kPaper = "Paper-";
  constexpr std::string_view kPara = "-Paragraph-";
  if (!local.starts_with(kPaper)) return {};
  const auto end = local.find(kPara);
  if (end == std::string_view::npos) return {};
  return std::string(local.substr(kPaper.size(), end - kPaper.size()));
}

bool ranks_before(const ScoredParagraph& a, const ScoredParagraph& b) {
  if (a.keyword_frequency != b.keyword_frequency) return a.keyword_frequency > b.keyword_frequency;
  return a.paragraph < b.paragraph;
}

}  // namespace

std::vector<ScoredParagraph> rank_paragraphs(const rdf::KnowledgeGraph& graph,
                                             const std::vector<std::string>& names,
                                             const std::vector<std::string>& keywords,
                                             rdf::MatchMode mode) {
  std::vector<ScoredParagraph> out;
  for (auto& hit : rdf::paragraphs_containing(graph, names, mode)) {
    const auto freq = rdf::keyword_frequency(hit.label, keywords);
    out.push_back({hit.paragraph, std::move(hit.label), freq, doc_of(hit.paragraph)});
  }
  std::sort(out.begin(), out.end(), ranks_before);
  return out;
}

std::vector<ScoredParagraph> diversify(const std::vector<ScoredParagraph>& ranked, std::size_t k,
                                       const embed::Embedder& embedder) {
  std::vector<ScoredParagraph> pool = ranked;
  std::sort(pool.begin(), pool.end(), ranks_before);
  k = std::min(k, pool.size());
  if (k == 0) return {};

  std::vector<embed::EmbeddingVector> vectors;
  vectors.reserve(pool.size());
  for (const auto& p : pool) vectors.push_back(embedder.embed(p.text));

  // nearest[i]: smallest distance from candidate i to anything chosen so far.
  std::vector<double> nearest(pool.size(), std::numeric_limits<double>::infinity());
  std::vector<bool> taken(pool.size(), false);
  std::vector<ScoredParagraph> out;
  std::size_t pick = 0;
  while (true) {
    taken[pick] = true;
    out.push_back(pool[pick]);
    if (out.size() == k) break;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (taken[i]) continue;
      nearest[i] = std::min(nearest[i], 1.0 - embed::cosine_similarity(vectors[i], vectors[pick]));
    }
    // Pool order already encodes the tie-break (frequency, then IRI), so
    // the first strict maximum wins.
    std::size_t best = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (taken[i]) continue;
      if (best == pool.size() || nearest[i] > nearest[best]) best = i;
    }
    pick = best;
  }
  return out;
}

std::vector<ScoredParagraph> select_context(const rdf::KnowledgeGraph& graph,
                                            const std::vector<std::string>& names,
                                            const std::vector<std::string>& keywords,
                                            const embed::Embedder& embedder,
                                            const ContextOptions& options) {
  if (options.diverse_k > options.top_n) {
    throw PreconditionError("diverse_k (" + std::to_string(options.diverse_k) +
                            ") must not exceed top_n (" + std::to_string(options.top_n) + ")");
  }
  auto ranked = rank_paragraphs(graph, names, keywords, options.mode);
  if (ranked.size() > options.top_n) ranked.resize(options.top_n);
  return diversify(ranked, options.diverse_k, embedder);
}

std::vector<ScoredParagraph> select_context(const rdf::KnowledgeGraph& graph,
                                            const std::vector<std::string>& names,
                                            const embed::Embedder& embedder,
                                            const ContextOptions& options) {
  return select_context(graph, names, names, embedder, options);
}

}  // namespace askg::kgqp
