#include "askg/ingest/segmenter.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "askg/text.hpp"

namespace askg::ingest {

namespace {

constexpr std::array<std::string_view, 24> kAbbreviations = {
    "al.",  "fig.", "figs.", "eq.",  "eqs.", "e.g.", "i.e.",  "dr.",
    "mr.",  "mrs.", "ms.",   "vs.",  "no.",  "sec.", "tab.",  "cf.",
    "approx.", "prof.", "st.", "inc.", "ltd.", "jr.", "etc.", "resp.",
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_closer(char c) { return c == '"' || c == '\'' || c == ')' || c == ']'; }

bool starts_sentence(char c) {
  const auto u = static_cast<unsigned char>(c);
  return std::isupper(u) || std::isdigit(u) || c == '"' || c == '\'' || c == '(' || c == '[';
}

// The whitespace-delimited word that ends at `end` (exclusive), lowercased.
std::string word_before(std::string_view text, std::size_t end) {
  std::size_t begin = end;
  while (begin > 0 && !is_space(text[begin - 1])) --begin;
  std::string word = text::to_lower(text.substr(begin, end - begin));
  while (!word.empty() && (word.front() == '(' || word.front() == '"' || word.front() == '\'')) {
    word.erase(word.begin());
  }
  return word;
}

bool is_abbreviation(std::string_view text, std::size_t dot_end) {
  const std::string word = word_before(text, dot_end);
  if (std::find(kAbbreviations.begin(), kAbbreviations.end(), word) != kAbbreviations.end()) {
    return true;
  }
  // Initials such as "J." in "J. Smith"; the word is lowercased, so look
  // at the original character.
  if (word.size() != 2) return false;
  return std::isupper(static_cast<unsigned char>(text[dot_end - 2])) != 0;
}

}  // namespace

std::vector<SentenceSpan> sentence_spans(std::string_view text) {
  std::vector<SentenceSpan> spans;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && is_space(text[i])) ++i;
  };
  skip_space();
  std::size_t start = i;
  while (i < text.size()) {
    const char c = text[i];
    if (c != '.' && c != '!' && c != '?') {
      ++i;
      continue;
    }
    std::size_t end = i + 1;
    while (end < text.size() && (text[end] == '.' || text[end] == '!' || text[end] == '?')) ++end;
    while (end < text.size() && is_closer(text[end])) ++end;
    std::size_t next = end;
    while (next < text.size() && is_space(text[next])) ++next;
    const bool gap = next > end;
    const bool boundary = gap && next < text.size() && starts_sentence(text[next]) &&
                          !(c == '.' && is_abbreviation(text, i + 1));
    if (boundary) {
      spans.push_back({start, end});
      start = next;
    }
    i = end;
  }
  std::size_t end = text.size();
  while (end > start && is_space(text[end - 1])) --end;
  if (end > start) spans.push_back({start, end});
  return spans;
}

std::vector<std::string> segment_sentences(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& span : sentence_spans(text)) {
    out.push_back(text::collapse_whitespace(text.substr(span.begin, span.end - span.begin)));
  }
  return out;
}

}  // namespace askg::ingest
