#include "askg/kgqp/pipeline.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

#include "askg/error.hpp"
#include "askg/kgqp/context.hpp"
#include "askg/kgqp/grounding.hpp"
#include "askg/text.hpp"

namespace askg::kgqp {

namespace {

bool is_structural(const rdf::KnowledgeGraph& graph, const rdf::Iri& node) {
  using namespace rdf::vocab;
  return graph.has_type(node, kPaper) || graph.has_type(node, kSection) ||
         graph.has_type(node, kParagraph) || graph.has_type(node, kExcerpt);
}

std::string spaced(const std::string& key) {
  std::string out = key;
  std::replace(out.begin(), out.end(), '_', ' ');
  return out;
}

std::string entity_name(const rdf::KnowledgeGraph& graph, const RankedEntity& e) {
  if (const auto* label = graph.label(e.iri)) {
    const std::string name = text::collapse_whitespace(label->lexical);
    if (!name.empty()) return name;
  }
  return spaced(e.key);
}

void add_keyword(std::vector<std::string>& keywords, const std::string& k) {
  if (k.empty()) return;
  const std::string lower = text::to_lower(k);
  for (const auto& existing : keywords) {
    if (text::to_lower(existing) == lower) return;
  }
  keywords.push_back(k);
}

std::string edit_text(const Edit& e) {
  if (e.kind == Edit::Kind::kDelete) return "delete " + std::to_string(e.position);
  return "replace " + std::to_string(e.position) + " with " + to_string(*e.replacement);
}

}  // namespace

QueryResult answer_question(const rdf::KnowledgeGraph& graph, std::string_view question,
                            const llm::Gateway& gateway, const embed::Embedder& embedder,
                            const PipelineOptions& options, const llm::TemplateSet& templates) {
  if (options.diverse_k > options.top_n) throw PreconditionError("diverse_k must not exceed top_n");

  QueryResult r;
  r.question = text::collapse_whitespace(question);
  r.lot = extract_lot_detailed(r.question, gateway, templates);

  const Grounder grounder(graph);
  const auto dict = default_dictionary(r.lot.query).merged(options.dictionary);
  r.ctkg = resolve_query(grounder, r.lot.query, dict, options.max_depth);

  std::set<std::string> query_entities;
  for (const auto& p : r.lot.query.patterns) {
    if (p.subject.is_ground()) query_entities.insert(p.subject.value);
    if (p.object.is_ground()) query_entities.insert(p.object.value);
  }
  r.ranked = rank_candidates(r.ctkg, query_entities);

  std::vector<RankedEntity> offered;
  for (const auto& e : r.ranked) {
    if (offered.size() == options.top_entities) break;
    if (e.score > 0.0 && !is_structural(graph, e.iri)) offered.push_back(e);
  }
  if (!offered.empty()) {
    r.selected = filter_candidates(r.question, offered, r.ctkg, gateway, templates, options.top_entities);
  }

  for (const auto& p : r.lot.query.patterns) {
    if (p.subject.is_ground()) add_keyword(r.keywords, spaced(p.subject.value));
    if (p.object.is_ground()) add_keyword(r.keywords, spaced(p.object.value));
  }
  for (const auto& e : r.selected) add_keyword(r.keywords, entity_name(graph, e));

  if (!r.keywords.empty()) {
    r.context = select_context(graph, r.keywords, r.keywords, embedder,
                               {options.top_n, options.diverse_k, rdf::MatchMode::kAny});
  }
  if (!r.context.empty()) {
    r.answer = generate_answer(r.question, r.context, gateway, templates);
    r.answered = true;
  }
  return r;
}

std::string provenance_json(const QueryResult& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["question"] = r.question;

  ordered_json lot = ordered_json::array();
  for (const auto& p : r.lot.query.patterns) lot.push_back(to_string(p));
  j["lot"] = lot;

  j["relaxation_depth"] = r.ctkg.depth;
  j["exhausted"] = r.ctkg.empty();
  ordered_json producers = ordered_json::array();
  for (const auto& q : r.ctkg.producing_queries) {
    ordered_json edits = ordered_json::array();
    for (const auto& e : q.edits) edits.push_back(edit_text(e));
    producers.push_back({{"query", to_string(q.query)}, {"edits", edits}});
  }
  j["producing_queries"] = producers;

  ordered_json ctkg = ordered_json::array();
  for (const auto& t : r.ctkg.triples) {
    ctkg.push_back(rdf::to_string(t.subject) + " " + rdf::to_string(t.predicate) + " " +
                   rdf::to_string(t.object));
  }
  j["ctkg"] = ctkg;

  auto entities = [](const std::vector<RankedEntity>& list) {
    ordered_json out = ordered_json::array();
    for (const auto& e : list) {
      out.push_back({{"entity", e.key},
                     {"iri", e.iri.value},
                     {"frequency", e.frequency},
                     {"purity", e.purity},
                     {"score", e.score}});
    }
    return out;
  };
  j["ranked_entities"] = entities(r.ranked);
  j["selected_entities"] = entities(r.selected);
  j["keywords"] = r.keywords;

  ordered_json context = ordered_json::array();
  for (const auto& p : r.context) {
    context.push_back({{"paragraph", p.paragraph.value},
                       {"doc_id", p.doc_id},
                       {"keyword_frequency", p.keyword_frequency}});
  }
  j["context"] = context;
  j["answered"] = r.answered;
  j["answer"] = r.answer.text;
  j["backend"] = r.answer.backend;
  return j.dump(2) + "\n";
}

std::string result_text(const QueryResult& r) {
  std::string out;
  out += r.answered ? r.answer.text : "No paragraph in the graph matches the question.";
  out += "\n\n";
  out += "LOT: " + to_string(r.lot.query) + "\n";
  if (r.ctkg.empty()) {
    out += "Matching: exhausted at depth " + std::to_string(r.ctkg.depth) + "\n";
  } else {
    out += "Matching: depth " + std::to_string(r.ctkg.depth) + ", " + std::to_string(r.ctkg.size()) +
           " candidate triple(s)\n";
  }
  out += "Keywords: " + text::join(r.keywords, ", ") + "\n";
  out += "Context:\n";
  for (const auto& p : r.context) {
    out += "  " + p.paragraph.value + " (keyword frequency " + std::to_string(p.keyword_frequency) + ")\n";
  }
  return out;
}

}  // namespace askg::kgqp
