#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "askg/baseline/chunker.hpp"
#include "askg/embed/embedder.hpp"

namespace askg::baseline {

struct RetrievedChunk {
  Chunk chunk;
  double similarity = 0.0;
};

/// Chunks ranked by cosine similarity to the query embedding, highest
/// first, ties by chunk_id; at most k. Throws PreconditionError when k is 0.
std::vector<RetrievedChunk> retrieve_top_k(const std::vector<Chunk>& chunks, std::string_view query,
                                           const embed::Embedder& embedder, std::size_t k);

}  // namespace askg::baseline
