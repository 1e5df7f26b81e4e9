#include "askg/baseline/retriever.hpp"

#include <algorithm>

#include "askg/error.hpp"

namespace askg::baseline {

std::vector<RetrievedChunk> retrieve_top_k(const std::vector<Chunk>& chunks, std::string_view query,
                                           const embed::Embedder& embedder, std::size_t k) {
  if (k == 0) throw PreconditionError("k must be at least 1");
  const auto q = embedder.embed(query);
  std::vector<RetrievedChunk> scored;
  scored.reserve(chunks.size());
  for (const auto& c : chunks) scored.push_back({c, embed::cosine_similarity(embedder.embed(c.text), q)});

  const auto better = [](const RetrievedChunk& a, const RetrievedChunk& b) {
    if (a.similarity != b.similarity) return a.similarity > b.similarity;
    return a.chunk.chunk_id < b.chunk.chunk_id;
  };
  const std::size_t n = std::min(k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(n), scored.end(), better);
  scored.resize(n);
  return scored;
}

}  // namespace askg::baseline
