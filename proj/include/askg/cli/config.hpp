#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "askg/llm/gateway.hpp"
#include "askg/net/http_client.hpp"

namespace askg::cli {

/// Bad flags, bad config values, or missing inputs; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EmbedderConfig {
  std::string kind = "stub";  // "stub" or "http"
  std::size_t dimension = 256;
  net::HttpSettings http;
  std::string model;
};

struct RunConfig {
  std::string graph;
  std::string corpus;
  llm::BackendConfig gateway;
  EmbedderConfig embedder;
  std::size_t top_n = 10;
  std::size_t diverse_k = 5;
  std::size_t max_depth = 2;
  std::size_t top_entities = 5;
  double threshold = 0.7;
  std::size_t chunk_tokens = 100;
  double chunk_overlap = 0.05;
  std::string format = "text";
  std::string templates_dir;
  std::string relaxation_dictionary;
};

/// "key = value" lines; '#' starts a comment, blank lines are skipped.
/// Throws UsageError naming the line on a line without '='.
std::map<std::string, std::string> parse_config(std::string_view text);

/// Applies known keys:
///   graph, corpus, format, templates_dir, relaxation_dictionary,
///   top_n, diverse_k, max_depth, top_entities, threshold,
///   chunk_tokens, chunk_overlap,
///   backend, llm.endpoint, llm.model, llm.token_env, llm.timeout_ms,
///   llm.retries, llm.backoff_ms, llm.min_interval_ms,
///   embedder, embed.dimension, embed.endpoint, embed.model, embed.token_env,
///   embed.timeout_ms, embed.retries, embed.backoff_ms, embed.min_interval_ms
/// Throws UsageError on an unknown key or a malformed value.
void apply_config(const std::map<std::string, std::string>& entries, RunConfig& config);

/// Throws UsageError when a numeric field is out of range or an enum
/// field has an unknown value.
void check_config(const RunConfig& config);

}  // namespace askg::cli
