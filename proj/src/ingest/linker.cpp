#include "askg/ingest/linker.hpp"

#include <optional>

#include "askg/error.hpp"
#include "askg/text.hpp"

namespace askg::ingest {

std::vector<ExcerptLink> link_excerpts(const std::vector<domo::Paragraph>& paragraphs,
                                       const std::vector<domo::Excerpt>& excerpts,
                                       const embed::Embedder& embedder, double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw PreconditionError("linking threshold must lie in [0, 1]");
  }
  std::vector<ExcerptLink> links;
  if (paragraphs.empty()) return links;

  // Paragraphs without text cannot be embedded and never win.
  std::vector<std::optional<embed::EmbeddingVector>> targets;
  targets.reserve(paragraphs.size());
  for (const auto& p : paragraphs) {
    const std::string body = domo::paragraph_text(p);
    if (text::trim(body).empty()) {
      targets.emplace_back();
    } else {
      targets.emplace_back(embedder.embed(body));
    }
  }

  for (const auto& e : excerpts) {
    if (text::trim(e.in_sentence).empty()) continue;
    const auto probe = embedder.embed(e.in_sentence);
    std::size_t best = paragraphs.size();
    double best_sim = -2.0;
    for (std::size_t i = 0; i < paragraphs.size(); ++i) {
      if (!targets[i]) continue;
      const double sim = embed::cosine_similarity(probe, *targets[i]);
      if (sim > best_sim) {
        best_sim = sim;
        best = i;
      }
    }
    if (best < paragraphs.size() && best_sim >= threshold) {
      links.push_back({e.excerpt_id, paragraphs[best].paragraph_id, best_sim});
    }
  }
  return links;
}

}  // namespace askg::ingest
