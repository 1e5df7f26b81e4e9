#include "askg/rdf/graph.hpp"

#include <algorithm>

namespace askg::rdf {

KnowledgeGraph::KnowledgeGraph(std::vector<Triple> triples) : triples_(std::move(triples)) {
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());

  ids_.reserve(triples_.size());
  for (const auto& t : triples_) {
    ids_.push_back({intern(t.subject), intern(t.predicate), intern(t.object)});
  }

  const auto label_id = id_of(Iri{vocab::kLabel});
  for (std::uint32_t pos = 0; pos < ids_.size(); ++pos) {
    const auto& t = ids_[pos];
    by_subject_[t.subject].push_back(pos);
    by_predicate_[t.predicate].push_back(pos);
    by_object_[t.object].push_back(pos);
    if (label_id && t.predicate == *label_id && std::holds_alternative<Literal>(terms_[t.object])) {
      labels_.try_emplace(t.subject, t.object);
    }
  }
}

TermId KnowledgeGraph::intern(const Term& t) {
  auto [it, inserted] = term_ids_.try_emplace(t, static_cast<TermId>(terms_.size()));
  if (inserted) terms_.push_back(t);
  return it->second;
}

bool KnowledgeGraph::contains(const Triple& t) const {
  return std::binary_search(triples_.begin(), triples_.end(), t);
}

std::optional<TermId> KnowledgeGraph::id_of(const Term& t) const {
  const auto it = term_ids_.find(t);
  if (it == term_ids_.end()) return std::nullopt;
  return it->second;
}

std::span<const std::uint32_t> KnowledgeGraph::lookup(const Index& index, TermId id) {
  const auto it = index.find(id);
  if (it == index.end()) return {};
  return it->second;
}

std::span<const std::uint32_t> KnowledgeGraph::with_subject(TermId id) const {
  return lookup(by_subject_, id);
}
std::span<const std::uint32_t> KnowledgeGraph::with_predicate(TermId id) const {
  return lookup(by_predicate_, id);
}
std::span<const std::uint32_t> KnowledgeGraph::with_object(TermId id) const {
  return lookup(by_object_, id);
}

const Literal* KnowledgeGraph::label(const Iri& node) const {
  const auto id = id_of(node);
  if (!id) return nullptr;
  const auto it = labels_.find(*id);
  return it == labels_.end() ? nullptr : std::get_if<Literal>(&terms_[it->second]);
}

std::vector<Iri> KnowledgeGraph::instances_of(const std::string& type_iri) const {
  std::vector<Iri> out;
  const auto type_pred = id_of(Iri{vocab::kType});
  const auto type_obj = id_of(Iri{type_iri});
  if (!type_pred || !type_obj) return out;
  for (auto pos : with_object(*type_obj)) {
    if (ids_[pos].predicate == *type_pred) out.push_back(triples_[pos].subject);
  }
  return out;
}

std::vector<Term> KnowledgeGraph::objects(const Iri& subject, const std::string& predicate) const {
  std::vector<Term> out;
  const auto s = id_of(subject);
  const auto p = id_of(Iri{predicate});
  if (!s || !p) return out;
  for (auto pos : with_subject(*s)) {
    if (ids_[pos].predicate == *p) out.push_back(triples_[pos].object);
  }
  return out;
}

bool KnowledgeGraph::has_type(const Iri& node, const std::string& type_iri) const {
  return contains(Triple{node, Iri{vocab::kType}, Iri{type_iri}});
}

KnowledgeGraph KnowledgeGraph::merged(std::vector<Triple> more) const {
  more.insert(more.end(), triples_.begin(), triples_.end());
  return KnowledgeGraph(std::move(more));
}

}  // namespace askg::rdf
