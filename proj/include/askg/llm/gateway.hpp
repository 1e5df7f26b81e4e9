#pragma once

#include <memory>
#include <string>

#include "askg/net/http_client.hpp"

namespace askg::llm {

struct GatewayRequest {
  std::string system;
  std::string user;
  int max_tokens = 512;
  double temperature = 0.0;
};

struct GatewayResponse {
  std::string text;
  std::string backend;
  double latency_ms = 0.0;
};

/// A text-generation backend. Implementations must allow concurrent calls.
class Gateway {
 public:
  virtual ~Gateway() = default;

  /// Throws PreconditionError on an empty user text or bad limits,
  /// TransportError when the backend cannot be reached after retries and
  /// ProtocolError when it answers without usable text.
  GatewayResponse complete(const GatewayRequest& request) const;

  virtual std::string id() const = 0;

 protected:
  virtual std::string generate(const GatewayRequest& request) const = 0;
};

struct BackendConfig {
  std::string kind = "stub";  // "stub" or "http"
  net::HttpSettings http;
  std::string model;
};

/// Throws PreconditionError for an unknown kind or an http kind without
/// endpoint.
std::unique_ptr<Gateway> make_gateway(const BackendConfig& config);

}  // namespace askg::llm
