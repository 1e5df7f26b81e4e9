#include "askg/rdf/text_search.hpp"

#include <algorithm>

#include "askg/error.hpp"
#include "askg/text.hpp"

namespace askg::rdf {

std::vector<ParagraphHit> paragraphs_containing(const KnowledgeGraph& graph,
                                                const std::vector<std::string>& names,
                                                MatchMode mode) {
  if (names.empty()) throw PreconditionError("paragraphs_containing needs at least one name");
  std::vector<std::string> needles;
  for (const auto& n : names) needles.push_back(text::to_lower(n));

  std::vector<ParagraphHit> out;
  for (const auto& paragraph : graph.instances_of(vocab::kParagraph)) {
    const Literal* label = graph.label(paragraph);
    if (label == nullptr) continue;
    const std::string haystack = text::to_lower(label->lexical);
    auto contains = [&](const std::string& n) { return haystack.find(n) != std::string::npos; };
    const bool hit = mode == MatchMode::kAny ? std::any_of(needles.begin(), needles.end(), contains)
                                             : std::all_of(needles.begin(), needles.end(), contains);
    if (hit) out.push_back({paragraph, label->lexical});
  }
  std::sort(out.begin(), out.end(),
            [](const ParagraphHit& a, const ParagraphHit& b) { return a.paragraph < b.paragraph; });
  return out;
}

std::size_t keyword_frequency(const std::string& label, const std::vector<std::string>& keywords) {
  const std::string haystack = text::to_lower(label);
  std::size_t total = 0;
  for (const auto& k : keywords) total += text::count_occurrences(haystack, text::to_lower(k));
  return total;
}

std::string paragraph_filter_conditions(const std::vector<std::string>& names, MatchMode mode) {
  std::string conditions;
  for (const auto& n : names) {
    if (!conditions.empty()) conditions += mode == MatchMode::kAny ? " ||\n    " : " &&\n    ";
    std::string escaped;
    for (char c : text::to_lower(n)) {
      if (c == '"' || c == '\\') escaped.push_back('\\');
      escaped.push_back(c);
    }
    conditions += "CONTAINS(LCASE(STR(?label)), \"" + escaped + "\")";
  }
  return conditions;
}

}  // namespace askg::rdf
