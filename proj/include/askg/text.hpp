#pragma once

#include <string>
#include <string_view>
#include <vector>

// Small text helpers shared by the ingestion, matching and scoring code.
// All case folding is ASCII-only; bytes >= 0x80 pass through untouched so
// UTF-8 sequences survive intact.
namespace askg::text {

std::string to_lower(std::string_view s);
std::string_view trim(std::string_view s);

/// Replaces every whitespace run with one space and trims the ends.
std::string collapse_whitespace(std::string_view s);

/// Whitespace-delimited tokens. This is the word definition used for
/// paragraph word counts and for baseline chunking.
std::vector<std::string> whitespace_tokens(std::string_view s);
std::size_t word_count(std::string_view s);

/// Lowercased runs of alphanumeric characters (UTF-8 bytes count as
/// alphanumeric). Used for bag-of-words style comparisons.
std::vector<std::string> word_tokens(std::string_view s);

/// Normalizes free text or an IRI local name into an entity key:
/// camelCase boundaries become separators, then lowercase, then every run
/// of non-alphanumerics collapses to one underscore. "PDF research
/// proposals" -> "pdf_research_proposals", "extractsTextFrom" ->
/// "extracts_text_from".
std::string entity_key(std::string_view s);

/// Splits an entity key on underscores.
std::vector<std::string> key_tokens(std::string_view key);

/// True when `needle` occurs as a contiguous run inside `haystack`.
bool contains_sequence(const std::vector<std::string>& haystack,
                       const std::vector<std::string>& needle);

/// Count of non-overlapping occurrences of `needle` in `haystack`.
std::size_t count_occurrences(std::string_view haystack, std::string_view needle);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace askg::text
