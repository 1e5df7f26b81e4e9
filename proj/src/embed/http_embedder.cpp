#include "askg/embed/http_embedder.hpp"

#include <cmath>

#include "json.hpp"

#include "askg/error.hpp"
#include "askg/text.hpp"

namespace askg::embed {

HttpEmbedder::HttpEmbedder(net::HttpSettings settings, std::string model)
    : poster_(std::make_unique<net::JsonPoster>(std::move(settings))), model_(std::move(model)) {}

std::size_t HttpEmbedder::dimension() const {
  std::lock_guard lock(mutex_);
  return dimension_;
}

EmbeddingVector HttpEmbedder::embed(std::string_view text) const {
  if (text::trim(text).empty()) throw PreconditionError("cannot embed empty text");
  nlohmann::json request = {{"model", model_}, {"input", std::string(text)}};
  const auto reply = poster_->post(request.dump());

  EmbeddingVector v;
  try {
    const auto body = nlohmann::json::parse(reply.body);
    v = body.at("data").at(0).at("embedding").get<EmbeddingVector>();
  } catch (const nlohmann::json::exception& e) {
    throw ProtocolError(std::string("embedding response: ") + e.what());
  }
  if (v.empty()) throw ProtocolError("embedding response: empty vector");
  for (double x : v) {
    if (!std::isfinite(x)) throw ProtocolError("embedding response: non-finite value");
  }
  std::lock_guard lock(mutex_);
  if (dimension_ == 0) dimension_ = v.size();
  if (v.size() != dimension_) {
    throw ProtocolError("embedding response: dimension " + std::to_string(v.size()) +
                        " differs from " + std::to_string(dimension_));
  }
  return v;
}

}  // namespace askg::embed
