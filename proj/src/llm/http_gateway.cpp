#include "askg/llm/http_gateway.hpp"

#include "json.hpp"

#include "askg/error.hpp"

namespace askg::llm {

HttpGateway::HttpGateway(net::HttpSettings settings, std::string model)
    : poster_(std::make_unique<net::JsonPoster>(std::move(settings))), model_(std::move(model)) {}

std::string HttpGateway::generate(const GatewayRequest& request) const {
  nlohmann::json messages = nlohmann::json::array();
  if (!request.system.empty()) messages.push_back({{"role", "system"}, {"content", request.system}});
  messages.push_back({{"role", "user"}, {"content", request.user}});
  nlohmann::json body = {{"model", model_},
                         {"messages", messages},
                         {"max_tokens", request.max_tokens},
                         {"temperature", request.temperature}};
  const auto reply = poster_->post(body.dump());
  try {
    const auto j = nlohmann::json::parse(reply.body);
    const auto& content = j.at("choices").at(0).at("message").at("content");
    if (content.is_null()) return {};
    return content.get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ProtocolError(std::string("chat completion response: ") + e.what());
  }
}

}  // namespace askg::llm
