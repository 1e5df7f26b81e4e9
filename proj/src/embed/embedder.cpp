#include "askg/embed/embedder.hpp"

#include <algorithm>
#include <cmath>

#include "askg/error.hpp"

namespace askg::embed {

double cosine_similarity(const EmbeddingVector& u, const EmbeddingVector& v) {
  if (u.size() != v.size()) {
    throw PreconditionError("cosine_similarity: dimension mismatch (" + std::to_string(u.size()) +
                            " vs " + std::to_string(v.size()) + ")");
  }
  double dot = 0.0;
  double uu = 0.0;
  double vv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    uu += u[i] * u[i];
    vv += v[i] * v[i];
  }
  if (!std::isfinite(dot) || !std::isfinite(uu) || !std::isfinite(vv)) {
    throw PreconditionError("cosine_similarity: non-finite component");
  }
  if (uu == 0.0 || vv == 0.0) throw PreconditionError("cosine_similarity: zero vector");
  return std::clamp(dot / (std::sqrt(uu) * std::sqrt(vv)), -1.0, 1.0);
}

EmbeddingVector mean_pool(const std::vector<EmbeddingVector>& vectors) {
  if (vectors.empty()) throw PreconditionError("mean_pool: no vectors");
  EmbeddingVector out(vectors.front().size(), 0.0);
  for (const auto& v : vectors) {
    if (v.size() != out.size()) throw PreconditionError("mean_pool: dimension mismatch");
    for (std::size_t i = 0; i < v.size(); ++i) out[i] += v[i];
  }
  for (double& x : out) x /= static_cast<double>(vectors.size());
  return out;
}

}  // namespace askg::embed
