#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace askg::embed {

using EmbeddingVector = std::vector<double>;

/// Text embedding provider. Implementations must be safe to call from
/// several threads at once.
class Embedder {
 public:
  virtual ~Embedder() = default;

  /// Throws PreconditionError on empty (or all-whitespace) text.
  virtual EmbeddingVector embed(std::string_view text) const = 0;
  virtual std::size_t dimension() const = 0;
  virtual std::string id() const = 0;
};

/// dot(u,v) / (|u| |v|), clamped to [-1, 1]. Throws PreconditionError on a
/// dimension mismatch, an empty or zero vector, or a non-finite value.
double cosine_similarity(const EmbeddingVector& u, const EmbeddingVector& v);

/// Element-wise mean of equal-length vectors.
EmbeddingVector mean_pool(const std::vector<EmbeddingVector>& vectors);

}  // namespace askg::embed
