#include "askg/llm/gateway.hpp"

#include <chrono>

#include "askg/error.hpp"
#include "askg/llm/http_gateway.hpp"
#include "askg/llm/stub_gateway.hpp"
#include "askg/text.hpp"

namespace askg::llm {

GatewayResponse Gateway::complete(const GatewayRequest& request) const {
  if (text::trim(request.user).empty()) throw PreconditionError("gateway request has no user text");
  if (request.max_tokens <= 0) throw PreconditionError("max_tokens must be positive");
  if (!(request.temperature >= 0.0)) throw PreconditionError("temperature must be non-negative");

  const auto start = std::chrono::steady_clock::now();
  std::string text = generate(request);
  const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
  if (text::trim(text).empty()) throw ProtocolError(id() + " returned an empty completion");
  return {std::move(text), id(), elapsed.count()};
}

std::unique_ptr<Gateway> make_gateway(const BackendConfig& config) {
  if (config.kind == "stub") return std::make_unique<StubGateway>();
  if (config.kind == "http") {
    if (config.http.endpoint.empty()) throw PreconditionError("http backend needs an endpoint");
    return std::make_unique<HttpGateway>(config.http, config.model);
  }
  throw PreconditionError("unknown gateway backend: " + config.kind);
}

}  // namespace askg::llm
