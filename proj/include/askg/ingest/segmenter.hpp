#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace askg::ingest {

/// Rule-based sentence splitter. A boundary is a terminator (. ! ?),
/// optionally followed by closing quotes or brackets, then whitespace, then
/// an uppercase letter, digit or opening quote. Common scholarly
/// abbreviations ("et al.", "Fig.", "e.g.") and single-letter initials do
/// not end a sentence. Internal whitespace is collapsed to single spaces.
std::vector<std::string> segment_sentences(std::string_view text);

/// Same split, reporting [begin, end) byte offsets into `text` instead.
struct SentenceSpan {
  std::size_t begin;
  std::size_t end;
};
std::vector<SentenceSpan> sentence_spans(std::string_view text);

}  // namespace askg::ingest
