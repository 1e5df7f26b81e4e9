#pragma once

#include <memory>

#include "askg/llm/gateway.hpp"

namespace askg::llm {

/// OpenAI-style chat completions client: one POST of {model, messages,
/// max_tokens, temperature} per call, reading choices[0].message.content.
class HttpGateway final : public Gateway {
 public:
  HttpGateway(net::HttpSettings settings, std::string model);

  std::string id() const override { return "http:" + model_; }

 protected:
  std::string generate(const GatewayRequest& request) const override;

 private:
  std::unique_ptr<net::JsonPoster> poster_;
  std::string model_;
};

}  // namespace askg::llm
