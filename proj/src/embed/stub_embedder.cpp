#include "askg/embed/stub_embedder.hpp"

#include <cmath>

#include "askg/error.hpp"
#include "askg/text.hpp"

namespace askg::embed {

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

StubEmbedder::StubEmbedder(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw PreconditionError("embedding dimension must be positive");
}

EmbeddingVector StubEmbedder::embed(std::string_view input) const {
  const std::string_view trimmed = text::trim(input);
  if (trimmed.empty()) throw PreconditionError("cannot embed empty text");
  auto tokens = text::word_tokens(trimmed);
  if (tokens.empty()) tokens.emplace_back(trimmed);

  EmbeddingVector v(dimension_, 0.0);
  for (const auto& t : tokens) v[fnv1a64(t) % dimension_] += 1.0;
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  for (double& x : v) x /= norm;
  return v;
}

}  // namespace askg::embed
