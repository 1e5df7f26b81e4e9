#include "askg/rdf/stats.hpp"

#include <cstdio>
#include <set>
#include <unordered_set>

#include "json.hpp"

#include "askg/text.hpp"

namespace askg::rdf {

GraphStats graph_stats(const KnowledgeGraph& graph) {
  GraphStats s;
  s.triples = graph.size();
  s.papers = graph.instances_of(vocab::kPaper).size();
  s.sections = graph.instances_of(vocab::kSection).size();
  const auto paragraphs = graph.instances_of(vocab::kParagraph);
  s.paragraphs = paragraphs.size();
  s.excerpts = graph.instances_of(vocab::kExcerpt).size();

  std::size_t words = 0;
  for (const auto& p : paragraphs) {
    if (const Literal* label = graph.label(p)) words += text::word_count(label->lexical);
  }
  if (s.paragraphs > 0) s.average_words_per_paragraph = static_cast<double>(words) / s.paragraphs;

  std::unordered_set<TermId> entities;
  std::unordered_set<TermId> predicates;
  std::unordered_set<TermId> types;
  std::unordered_set<TermId> linked;
  const auto type_id = graph.id_of(Iri{vocab::kType});
  const auto has_excerpt_id = graph.id_of(Iri{vocab::kHasExcerpt});
  for (const auto& t : graph.id_triples()) {
    entities.insert(t.subject);
    if (is_iri(graph.term(t.object))) entities.insert(t.object);
    predicates.insert(t.predicate);
    if (type_id && t.predicate == *type_id) types.insert(t.object);
    if (has_excerpt_id && t.predicate == *has_excerpt_id) {
      ++s.has_excerpt_edges;
      linked.insert(t.object);
    }
  }
  s.entities = entities.size();
  s.relationship_types = predicates.size();
  s.entity_types = types.size();
  s.linked_excerpts = linked.size();
  if (s.excerpts > 0) {
    s.linked_excerpt_percentage = 100.0 * static_cast<double>(s.linked_excerpts) / s.excerpts;
  }
  return s;
}

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

std::string stats_to_text(const GraphStats& s) {
  std::string out = "Item\tValue\n";
  auto row = [&](const char* name, const std::string& value) {
    out += name;
    out += '\t';
    out += value;
    out += '\n';
  };
  row("Number of scientific papers", std::to_string(s.papers));
  row("Total sections", std::to_string(s.sections));
  row("Total paragraphs", std::to_string(s.paragraphs));
  row("Average words per paragraph", fixed(s.average_words_per_paragraph, 1));
  row("Total excerpts in the KG", std::to_string(s.excerpts));
  row("Excerpts linked to paragraphs", std::to_string(s.linked_excerpts));
  row("Percentage of linked excerpts", fixed(s.linked_excerpt_percentage, 1) + "%");
  row("Number of relationship types", std::to_string(s.relationship_types));
  row("Number of entity types", std::to_string(s.entity_types));
  row("Number of triples", std::to_string(s.triples));
  row("Number of entities", std::to_string(s.entities));
  return out;
}

std::string stats_to_json(const GraphStats& s) {
  nlohmann::ordered_json j;
  j["Number of scientific papers"] = s.papers;
  j["Total sections"] = s.sections;
  j["Total paragraphs"] = s.paragraphs;
  j["Average words per paragraph"] = s.average_words_per_paragraph;
  j["Total excerpts in the KG"] = s.excerpts;
  j["Excerpts linked to paragraphs"] = s.linked_excerpts;
  j["Percentage of linked excerpts"] = s.linked_excerpt_percentage;
  j["hasExcerpt edges"] = s.has_excerpt_edges;
  j["Number of relationship types"] = s.relationship_types;
  j["Number of entity types"] = s.entity_types;
  j["Number of triples"] = s.triples;
  j["Number of entities"] = s.entities;
  return j.dump(2) + "\n";
}

}  // namespace askg::rdf
