#include "askg/kgqp/grounding.hpp"

#include <algorithm>
#include <set>

#include "askg/text.hpp"

namespace askg::kgqp {

namespace {

bool same_key(const std::string& a, const std::string& b) {
  if (a == b) return true;
  if (a.size() + 1 == b.size()) return b.back() == 's' && b.compare(0, a.size(), a) == 0;
  if (b.size() + 1 == a.size()) return a.back() == 's' && a.compare(0, b.size(), b) == 0;
  return false;
}

bool is_structural_type(const std::string& type_iri) {
  using namespace rdf::vocab;
  return type_iri == kPaper || type_iri == kSection || type_iri == kParagraph || type_iri == kExcerpt;
}

}  // namespace

Grounder::Grounder(const rdf::KnowledgeGraph& graph) : graph_(graph) {
  std::set<rdf::TermId> node_ids;
  std::set<rdf::TermId> predicate_ids;
  std::set<rdf::TermId> literal_ids;
  for (const auto& t : graph.id_triples()) {
    node_ids.insert(t.subject);
    predicate_ids.insert(t.predicate);
    if (rdf::is_iri(graph.term(t.object))) {
      node_ids.insert(t.object);
    } else {
      literal_ids.insert(t.object);
    }
  }

  for (rdf::TermId id : node_ids) {
    const auto& iri = std::get<rdf::Iri>(graph.term(id));
    NodeInfo info{id, rdf::node_key(iri.value), {}, {}};
    bool structural = false;
    for (const auto& type : graph.objects(iri, rdf::vocab::kType)) {
      if (const auto* t = rdf::as_iri(type)) {
        info.type_keys.push_back(rdf::node_key(t->value));
        structural = structural || is_structural_type(t->value);
      }
    }
    if (!structural) {
      if (const auto* label = graph.label(iri)) {
        info.label_tokens = text::key_tokens(text::entity_key(label->lexical));
      }
    }
    nodes_.push_back(std::move(info));
  }
  for (rdf::TermId id : predicate_ids) {
    const auto& iri = std::get<rdf::Iri>(graph.term(id));
    predicates_.push_back({id, text::key_tokens(rdf::node_key(iri.value))});
  }
  for (rdf::TermId id : literal_ids) {
    literals_.push_back({id, text::key_tokens(text::entity_key(rdf::as_literal(graph.term(id))->lexical))});
  }
}

std::vector<rdf::Term> Grounder::compute_nodes(const std::string& key, bool object_position) const {
  const auto tokens = text::key_tokens(key);
  std::vector<rdf::Term> out;
  if (tokens.empty()) return out;
  for (const auto& n : nodes_) {
    const bool hit = same_key(n.key, key) ||
                     std::any_of(n.type_keys.begin(), n.type_keys.end(),
                                 [&](const std::string& t) { return same_key(t, key); }) ||
                     (!n.label_tokens.empty() && text::contains_sequence(n.label_tokens, tokens));
    if (hit) out.push_back(graph_.term(n.id));
  }
  if (object_position) {
    for (const auto& l : literals_) {
      if (text::contains_sequence(l.tokens, tokens)) out.push_back(graph_.term(l.id));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<rdf::Term> Grounder::compute_predicates(const std::string& key) const {
  const auto tokens = text::key_tokens(key);
  std::vector<rdf::Term> out;
  if (tokens.empty()) return out;
  for (const auto& p : predicates_) {
    if (text::contains_sequence(p.tokens, tokens) || text::contains_sequence(tokens, p.tokens)) {
      out.push_back(graph_.term(p.id));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<rdf::Term> Grounder::nodes_for(const std::string& key, bool object_position) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = node_memo_.find({key, object_position}); it != node_memo_.end()) return it->second;
  }
  auto terms = compute_nodes(key, object_position);
  std::lock_guard lock(mutex_);
  return node_memo_.emplace(std::pair{key, object_position}, std::move(terms)).first->second;
}

std::vector<rdf::Term> Grounder::predicates_for(const std::string& key) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = predicate_memo_.find(key); it != predicate_memo_.end()) return it->second;
  }
  auto terms = compute_predicates(key);
  std::lock_guard lock(mutex_);
  return predicate_memo_.emplace(key, std::move(terms)).first->second;
}

rdf::TriplePattern Grounder::ground(const TriplePattern& pattern) const {
  auto slot = [&](const QueryTerm& t, int position) -> rdf::PatternTerm {
    switch (t.kind) {
      case QueryTerm::Kind::kWildcard: return rdf::Wildcard{};
      case QueryTerm::Kind::kVariable: return rdf::Variable{t.value};
      case QueryTerm::Kind::kGround: break;
    }
    const std::string key = text::entity_key(t.value);
    return rdf::OneOf{position == 1 ? predicates_for(key) : nodes_for(key, position == 2)};
  };
  return {slot(pattern.subject, 0), slot(pattern.predicate, 1), slot(pattern.object, 2)};
}

rdf::CompoundQuery Grounder::ground(const CompoundQuery& query) const {
  rdf::CompoundQuery out;
  for (const auto& p : query.patterns) out.patterns.push_back(ground(p));
  return out;
}

}  // namespace askg::kgqp
