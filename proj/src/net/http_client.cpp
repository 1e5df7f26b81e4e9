#include "askg/net/http_client.hpp"

#include <cstdlib>
#include <thread>

#include "httplib.h"

#include "askg/error.hpp"

namespace askg::net {

JsonPoster::JsonPoster(HttpSettings settings) : settings_(std::move(settings)) {
  const std::string& url = settings_.endpoint;
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw PreconditionError("endpoint must be an absolute http(s) URL: " + url);
  }
  const auto path_start = url.find('/', scheme_end + 3);
  origin_ = url.substr(0, path_start);
  path_ = path_start == std::string::npos ? "/" : url.substr(path_start);
  if (settings_.retries < 0 || settings_.timeout_ms <= 0) {
    throw PreconditionError("retries must be >= 0 and timeout positive");
  }
}

void JsonPoster::wait_turn() {
  if (settings_.min_interval_ms <= 0) return;
  const auto gap = std::chrono::milliseconds(settings_.min_interval_ms);
  const auto now = std::chrono::steady_clock::now();
  if (last_.time_since_epoch().count() != 0 && now - last_ < gap) {
    std::this_thread::sleep_for(gap - (now - last_));
  }
  last_ = std::chrono::steady_clock::now();
}

HttpReply JsonPoster::post(const std::string& json_body) {
  std::lock_guard lock(mutex_);

  httplib::Client client(origin_);
  const auto timeout = std::chrono::milliseconds(settings_.timeout_ms);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);

  httplib::Headers headers;
  if (!settings_.token_env.empty()) {
    if (const char* token = std::getenv(settings_.token_env.c_str()); token && *token) {
      headers.emplace("Authorization", std::string("Bearer ") + token);
    }
  }

  int last_status = 0;
  std::string last_error;
  const int attempts = settings_.retries + 1;
  int made = 0;
  for (int attempt = 1; attempt <= attempts; ++attempt) {
    made = attempt;
    if (attempt > 1 && settings_.backoff_ms > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(settings_.backoff_ms * (attempt - 1)));
    }
    wait_turn();
    auto res = client.Post(path_, headers, json_body, "application/json");
    if (!res) {
      last_status = 0;
      last_error = httplib::to_string(res.error());
      continue;
    }
    last_status = res->status;
    if (res->status < 400) return {res->status, res->body, attempt};
    last_error = "HTTP " + std::to_string(res->status);
    if (res->status != 429 && res->status < 500) break;
  }
  throw TransportError(settings_.endpoint + ": " + last_error + " after " +
                           std::to_string(made) + " attempt(s)",
                       last_status);
}

}  // namespace askg::net
