#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "askg/rdf/term.hpp"

namespace askg::rdf {

using TermId = std::uint32_t;

struct IdTriple {
  TermId subject;
  TermId predicate;
  TermId object;

  friend auto operator<=>(const IdTriple&, const IdTriple&) = default;
};

/// Immutable, indexed set of ground triples. Construction sorts and
/// deduplicates; every accessor is const and safe to call concurrently.
/// Grow a graph by building a new one (see `merged`).
class KnowledgeGraph {
 public:
  KnowledgeGraph() = default;
  explicit KnowledgeGraph(std::vector<Triple> triples);

  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  /// Triples in canonical (subject, predicate, object) order.
  const std::vector<Triple>& triples() const { return triples_; }
  bool contains(const Triple& t) const;

  std::optional<TermId> id_of(const Term& t) const;
  const Term& term(TermId id) const { return terms_[id]; }
  std::size_t term_count() const { return terms_.size(); }

  std::span<const IdTriple> id_triples() const { return ids_; }
  /// Positions (into triples()/id_triples()) keyed by one component.
  std::span<const std::uint32_t> with_subject(TermId id) const;
  std::span<const std::uint32_t> with_predicate(TermId id) const;
  std::span<const std::uint32_t> with_object(TermId id) const;

  /// First rdfs:label of a node in canonical order.
  const Literal* label(const Iri& node) const;
  std::vector<Iri> instances_of(const std::string& type_iri) const;
  std::vector<Term> objects(const Iri& subject, const std::string& predicate) const;
  bool has_type(const Iri& node, const std::string& type_iri) const;

  KnowledgeGraph merged(std::vector<Triple> more) const;

  friend bool operator==(const KnowledgeGraph& a, const KnowledgeGraph& b) {
    return a.triples_ == b.triples_;
  }

 private:
  using Index = std::unordered_map<TermId, std::vector<std::uint32_t>>;
  static std::span<const std::uint32_t> lookup(const Index& index, TermId id);
  TermId intern(const Term& t);

  std::vector<Triple> triples_;
  std::vector<IdTriple> ids_;
  std::vector<Term> terms_;
  std::unordered_map<Term, TermId> term_ids_;
  Index by_subject_;
  Index by_predicate_;
  Index by_object_;
  std::unordered_map<TermId, std::uint32_t> labels_;
};

}  // namespace askg::rdf
