#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace askg::baseline {

struct Chunk {
  std::string chunk_id;  // "<doc_id>#<n>", n from 0
  std::string doc_id;
  std::string text;      // tokens [start, end) joined by single spaces
  std::size_t start = 0;
  std::size_t end = 0;

  friend bool operator==(const Chunk&, const Chunk&) = default;
};

struct ChunkOptions {
  std::size_t max_tokens = 100;
  double overlap_ratio = 0.05;
};

/// Tokens shared by neighbouring chunks: round(overlap_ratio * max_tokens).
std::size_t overlap_tokens(const ChunkOptions& options);
/// max(1, max_tokens - overlap_tokens).
std::size_t stride(const ChunkOptions& options);
/// Closed-form chunk count for a document of `tokens` whitespace tokens.
std::size_t chunk_count(std::size_t tokens, const ChunkOptions& options = {});

/// Fixed-size windows over whitespace tokens, advancing by stride(); the
/// last window may be short. Empty text gives no chunks. Throws
/// PreconditionError unless max_tokens >= 1 and 0 <= overlap_ratio < 1.
std::vector<Chunk> chunk_text(std::string_view text, const ChunkOptions& options = {},
                              const std::string& doc_id = "doc");

/// One JSON object per chunk: chunk_id, doc_id, start, end, text.
std::string chunks_to_jsonl(const std::vector<Chunk>& chunks);

}  // namespace askg::baseline
