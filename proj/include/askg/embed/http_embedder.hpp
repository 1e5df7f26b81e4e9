#pragma once

#include <memory>
#include <string>

#include "askg/embed/embedder.hpp"
#include "askg/net/http_client.hpp"

namespace askg::embed {

/// Client for an OpenAI-style embeddings endpoint: POST {"model", "input"}
/// and read data[0].embedding. The first response fixes the dimension;
/// later responses of a different length are a ProtocolError.
class HttpEmbedder final : public Embedder {
 public:
  HttpEmbedder(net::HttpSettings settings, std::string model);

  EmbeddingVector embed(std::string_view text) const override;
  std::size_t dimension() const override;
  std::string id() const override { return "http:" + model_; }

 private:
  std::unique_ptr<net::JsonPoster> poster_;
  std::string model_;
  mutable std::mutex mutex_;
  mutable std::size_t dimension_ = 0;
};

}  // namespace askg::embed
