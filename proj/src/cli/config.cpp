#include "askg/cli/config.hpp"

#include <charconv>
#include <functional>

#include "askg/text.hpp"

namespace askg::cli {

std::map<std::string, std::string> parse_config(std::string_view text) {
  std::map<std::string, std::string> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = text::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    out[std::string(text::trim(line.substr(0, eq)))] = std::string(text::trim(line.substr(eq + 1)));
  }
  return out;
}

namespace {

template <class T>
T number(const std::string& key, const std::string& value) {
  T v{};
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, v);
  if (ec != std::errc() || ptr != end) throw UsageError("config " + key + ": not a number: '" + value + "'");
  return v;
}

}  // namespace

void apply_config(const std::map<std::string, std::string>& entries, RunConfig& c) {
  using Setter = std::function<void(const std::string&, const std::string&)>;
  auto str = [](std::string& field) -> Setter { return [&field](auto&, const std::string& v) { field = v; }; };
  auto size = [](std::size_t& field) -> Setter {
    return [&field](const std::string& k, const std::string& v) { field = number<std::size_t>(k, v); };
  };
  auto integer = [](int& field) -> Setter {
    return [&field](const std::string& k, const std::string& v) { field = number<int>(k, v); };
  };
  auto real = [](double& field) -> Setter {
    return [&field](const std::string& k, const std::string& v) { field = number<double>(k, v); };
  };

  const std::map<std::string, Setter> setters = {
      {"graph", str(c.graph)},
      {"corpus", str(c.corpus)},
      {"format", str(c.format)},
      {"templates_dir", str(c.templates_dir)},
      {"relaxation_dictionary", str(c.relaxation_dictionary)},
      {"top_n", size(c.top_n)},
      {"diverse_k", size(c.diverse_k)},
      {"max_depth", size(c.max_depth)},
      {"top_entities", size(c.top_entities)},
      {"threshold", real(c.threshold)},
      {"chunk_tokens", size(c.chunk_tokens)},
      {"chunk_overlap", real(c.chunk_overlap)},
      {"backend", str(c.gateway.kind)},
      {"llm.endpoint", str(c.gateway.http.endpoint)},
      {"llm.model", str(c.gateway.model)},
      {"llm.token_env", str(c.gateway.http.token_env)},
      {"llm.timeout_ms", integer(c.gateway.http.timeout_ms)},
      {"llm.retries", integer(c.gateway.http.retries)},
      {"llm.backoff_ms", integer(c.gateway.http.backoff_ms)},
      {"llm.min_interval_ms", integer(c.gateway.http.min_interval_ms)},
      {"embedder", str(c.embedder.kind)},
      {"embed.dimension", size(c.embedder.dimension)},
      {"embed.endpoint", str(c.embedder.http.endpoint)},
      {"embed.model", str(c.embedder.model)},
      {"embed.token_env", str(c.embedder.http.token_env)},
      {"embed.timeout_ms", integer(c.embedder.http.timeout_ms)},
      {"embed.retries", integer(c.embedder.http.retries)},
      {"embed.backoff_ms", integer(c.embedder.http.backoff_ms)},
      {"embed.min_interval_ms", integer(c.embedder.http.min_interval_ms)},
  };
  for (const auto& [key, value] : entries) {
    auto it = setters.find(key);
    if (it == setters.end()) throw UsageError("config: unknown key '" + key + "'");
    it->second(key, value);
  }
}

void check_config(const RunConfig& c) {
  if (!(c.threshold >= 0.0 && c.threshold <= 1.0)) throw UsageError("threshold must lie in [0, 1]");
  if (c.top_n < 1) throw UsageError("top-n must be at least 1");
  if (c.diverse_k < 1) throw UsageError("diverse-k must be at least 1");
  if (c.format != "text" && c.format != "json") throw UsageError("format must be text or json");
  if (c.gateway.kind != "stub" && c.gateway.kind != "http") throw UsageError("backend must be stub or http");
  if (c.embedder.kind != "stub" && c.embedder.kind != "http") throw UsageError("embedder must be stub or http");
  if (c.gateway.kind == "http" && c.gateway.http.endpoint.empty()) {
    throw UsageError("backend http needs llm.endpoint in the config file");
  }
  if (c.embedder.kind == "http" && c.embedder.http.endpoint.empty()) {
    throw UsageError("embedder http needs embed.endpoint in the config file");
  }
  if (c.embedder.dimension < 1) throw UsageError("embed.dimension must be positive");
  if (c.chunk_tokens < 1) throw UsageError("chunk_tokens must be at least 1");
  if (!(c.chunk_overlap >= 0.0 && c.chunk_overlap < 1.0)) throw UsageError("chunk_overlap must lie in [0, 1)");
}

}  // namespace askg::cli
