#pragma once

#include <chrono>
#include <memory>
#include <mutex>
#include <string>

namespace askg::net {

struct HttpSettings {
  std::string endpoint;        // full URL, e.g. https://api.example.org/v1/chat/completions
  std::string token_env;       // name of the env var holding a bearer token; empty = no auth
  int timeout_ms = 30000;
  int retries = 2;             // extra attempts after the first
  int backoff_ms = 250;        // sleep before retry r is backoff_ms * r
  int min_interval_ms = 0;     // rate limit between consecutive requests
};

struct HttpReply {
  int status = 0;
  std::string body;
  int attempts = 0;
};

/// JSON-over-HTTP POST client with bounded retries. Connection failures,
/// timeouts, 429 and 5xx are retried; other 4xx fail at once. Calls are
/// serialized by an internal rate limiter, so one instance can be shared.
class JsonPoster {
 public:
  explicit JsonPoster(HttpSettings settings);

  /// Throws TransportError (with the last status) when no attempt succeeds.
  HttpReply post(const std::string& json_body);

  const HttpSettings& settings() const { return settings_; }

 private:
  void wait_turn();

  HttpSettings settings_;
  std::string origin_;  // scheme://host[:port]
  std::string path_;
  std::mutex mutex_;
  std::chrono::steady_clock::time_point last_{};
};

}  // namespace askg::net
