#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "askg/kgqp/query.hpp"
#include "askg/rdf/graph.hpp"
#include "askg/rdf/pattern.hpp"

namespace askg::kgqp {

/// Maps LOT patterns, whose ground terms are entity keys, onto graph
/// patterns over sets of graph terms.
///
/// A subject or object key k denotes every node N where
///   - N's key equals k (a trailing "s" on either side is ignored),
///   - N has an rdf:type whose key equals k, or
///   - N is not a document-structure node and its label, as key tokens,
///     contains k's tokens in order.
/// In object position k also denotes literals whose key tokens contain
/// k's tokens in order. A predicate key denotes every graph predicate
/// whose key tokens contain k's tokens in order, or the other way round.
///
/// Lookups are memoized; one Grounder may be shared between threads.
class Grounder {
 public:
  explicit Grounder(const rdf::KnowledgeGraph& graph);

  std::vector<rdf::Term> nodes_for(const std::string& key, bool object_position) const;
  std::vector<rdf::Term> predicates_for(const std::string& key) const;

  rdf::TriplePattern ground(const TriplePattern& pattern) const;
  rdf::CompoundQuery ground(const CompoundQuery& query) const;

  const rdf::KnowledgeGraph& graph() const { return graph_; }

 private:
  struct NodeInfo {
    rdf::TermId id;
    std::string key;
    std::vector<std::string> type_keys;
    std::vector<std::string> label_tokens;  // empty for structural nodes
  };
  struct KeyedTerm {
    rdf::TermId id;
    std::vector<std::string> tokens;
  };

  std::vector<rdf::Term> compute_nodes(const std::string& key, bool object_position) const;
  std::vector<rdf::Term> compute_predicates(const std::string& key) const;

  const rdf::KnowledgeGraph& graph_;
  std::vector<NodeInfo> nodes_;
  std::vector<KeyedTerm> literals_;
  std::vector<KeyedTerm> predicates_;

  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::string, bool>, std::vector<rdf::Term>> node_memo_;
  mutable std::map<std::string, std::vector<rdf::Term>> predicate_memo_;
};

}  // namespace askg::kgqp
