#pragma once

#include <cstdint>

#include "askg/embed/embedder.hpp"

namespace askg::embed {

/// Hashed bag of words. Each lowercase alphanumeric token goes to bucket
/// fnv1a64(token) mod dimension; the count vector is L2-normalized. Text
/// without word tokens hashes its trimmed form as a single token.
class StubEmbedder final : public Embedder {
 public:
  explicit StubEmbedder(std::size_t dimension = 256);

  EmbeddingVector embed(std::string_view text) const override;
  std::size_t dimension() const override { return dimension_; }
  std::string id() const override { return "stub-bow-" + std::to_string(dimension_); }

 private:
  std::size_t dimension_;
};

/// 64-bit FNV-1a over the bytes of `s`.
std::uint64_t fnv1a64(std::string_view s);

}  // namespace askg::embed
