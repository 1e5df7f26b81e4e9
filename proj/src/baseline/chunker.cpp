#include "askg/baseline/chunker.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"

#include "askg/error.hpp"
#include "askg/text.hpp"

namespace askg::baseline {

namespace {

void check(const ChunkOptions& o) {
  if (o.max_tokens < 1) throw PreconditionError("max_tokens must be at least 1");
  if (!(o.overlap_ratio >= 0.0 && o.overlap_ratio < 1.0)) {
    throw PreconditionError("overlap_ratio must lie in [0, 1)");
  }
}

}  // namespace

std::size_t overlap_tokens(const ChunkOptions& o) {
  check(o);
  return static_cast<std::size_t>(std::llround(o.overlap_ratio * static_cast<double>(o.max_tokens)));
}

std::size_t stride(const ChunkOptions& o) {
  const std::size_t overlap = overlap_tokens(o);
  return overlap >= o.max_tokens ? 1 : o.max_tokens - overlap;
}

std::size_t chunk_count(std::size_t tokens, const ChunkOptions& o) {
  const std::size_t s = stride(o);
  if (tokens == 0) return 0;
  if (tokens <= o.max_tokens) return 1;
  return 1 + (tokens - o.max_tokens + s - 1) / s;
}

std::vector<Chunk> chunk_text(std::string_view text, const ChunkOptions& o, const std::string& doc_id) {
  const std::size_t s = stride(o);
  const auto tokens = text::whitespace_tokens(text);
  std::vector<Chunk> out;
  for (std::size_t start = 0; start < tokens.size(); start += s) {
    const std::size_t end = std::min(start + o.max_tokens, tokens.size());
    std::vector<std::string> window(tokens.begin() + static_cast<std::ptrdiff_t>(start),
                                    tokens.begin() + static_cast<std::ptrdiff_t>(end));
    out.push_back({doc_id + "#" + std::to_string(out.size()), doc_id, text::join(window, " "), start, end});
    if (end == tokens.size()) break;
  }
  return out;
}

std::string chunks_to_jsonl(const std::vector<Chunk>& chunks) {
  std::string out;
  for (const auto& c : chunks) {
    nlohmann::ordered_json j;
    j["chunk_id"] = c.chunk_id;
    j["doc_id"] = c.doc_id;
    j["start"] = c.start;
    j["end"] = c.end;
    j["text"] = c.text;
    out += j.dump() + "\n";
  }
  return out;
}

}  // namespace askg::baseline
