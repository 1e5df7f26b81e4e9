#include "askg/eval/entities.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "askg/text.hpp"

namespace askg::eval {

namespace {

bool capitalized(const std::string& token) {
  return !token.empty() && std::isupper(static_cast<unsigned char>(token.front()));
}

std::string strip_punct(std::string t) {
  auto punct = [](char c) { return std::ispunct(static_cast<unsigned char>(c)) && c != '-' && c != '&'; };
  while (!t.empty() && punct(t.back())) t.pop_back();
  while (!t.empty() && punct(t.front())) t.erase(t.begin());
  return t;
}

}  // namespace

std::vector<std::string> entity_dictionary(const rdf::KnowledgeGraph& graph) {
  using namespace rdf;
  std::set<std::string> names;
  const auto type_id = graph.id_of(Iri{vocab::kType});
  std::set<TermId> structural;
  for (const auto& type : {vocab::kPaper, vocab::kSection, vocab::kParagraph, vocab::kExcerpt}) {
    for (const auto& n : graph.instances_of(type)) {
      if (auto id = graph.id_of(n)) structural.insert(*id);
    }
  }
  for (TermId id = 0; id < graph.term_count(); ++id) {
    const auto* iri = as_iri(graph.term(id));
    if (iri == nullptr) continue;
    if (auto key = academic_entity_key(iri->value)) {
      std::string spaced = *key;
      std::replace(spaced.begin(), spaced.end(), '_', ' ');
      names.insert(normalize_entity(spaced));
    }
    if (type_id && !structural.contains(id) && !graph.with_subject(id).empty()) {
      bool typed = false;
      for (auto idx : graph.with_subject(id)) typed = typed || graph.id_triples()[idx].predicate == *type_id;
      if (typed) {
        if (const auto* label = graph.label(*iri)) names.insert(normalize_entity(label->lexical));
      }
    }
  }
  names.erase("");
  return {names.begin(), names.end()};
}

EntitySet extract_entities(std::string_view input, const std::vector<std::string>& dictionary) {
  std::vector<std::string> found;

  std::vector<std::string> run;
  auto flush = [&] {
    // Sentence-initial articles are capitalized but not part of the name.
    if (!run.empty()) {
      const std::string first = text::to_lower(run.front());
      if (first == "the" || first == "a" || first == "an") run.erase(run.begin());
    }
    if (run.size() >= 2) found.push_back(text::join(run, " "));
    run.clear();
  };
  for (const auto& raw : text::whitespace_tokens(input)) {
    const std::string token = strip_punct(raw);
    if (capitalized(token)) {
      run.push_back(token);
      // A trailing comma or full stop ends the span.
      if (raw.back() == ',' || raw.back() == '.' || raw.back() == ';' || raw.back() == ':') flush();
    } else {
      flush();
    }
  }
  flush();

  const auto words = text::word_tokens(input);
  for (const auto& name : dictionary) {
    const auto needle = text::word_tokens(name);
    if (!needle.empty() && text::contains_sequence(words, needle)) found.push_back(name);
  }
  return EntitySet(found);
}

}  // namespace askg::eval
