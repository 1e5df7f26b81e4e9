#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "askg/kgqp/query.hpp"

namespace askg::kgqp {

/// Replacement patterns available to relaxation, kept sorted and distinct.
struct RelaxationDictionary {
  std::vector<TriplePattern> entries;

  RelaxationDictionary() = default;
  /// Sorts and deduplicates. Throws PreconditionError on a pattern without
  /// a ground term.
  explicit RelaxationDictionary(std::vector<TriplePattern> patterns);

  std::size_t size() const { return entries.size(); }
  RelaxationDictionary merged(const RelaxationDictionary& other) const;
};

struct Edit {
  enum class Kind { kReplace, kDelete };

  Kind kind = Kind::kDelete;
  std::size_t position = 1;  // 1-based, against the query the edit was applied to
  std::optional<TriplePattern> replacement;

  friend bool operator==(const Edit&, const Edit&) = default;
};

struct RelaxedQuery {
  CompoundQuery query;
  std::size_t depth = 0;  // always edits.size()
  std::vector<Edit> edits;
};

/// Replaces pattern i (1-based) with `replacement`, or removes it when the
/// replacement is absent. Throws PreconditionError when i is out of range,
/// the replacement has no ground term, or a deletion would leave no
/// pattern ("cannot relax below one triple").
CompoundQuery relax(const CompoundQuery& query, std::size_t i,
                    const std::optional<TriplePattern>& replacement);

/// Every one-edit relaxation: each deletion (when the query has two or
/// more patterns), then each replacement of pattern i by a dictionary
/// entry different from it. Results with equal pattern lists are kept
/// once, first occurrence wins.
std::vector<RelaxedQuery> relax_set(const CompoundQuery& query, const RelaxationDictionary& dict);

/// One more edit on top of `base`; depth and edit history carry over.
std::vector<RelaxedQuery> relax_set(const RelaxedQuery& base, const RelaxationDictionary& dict);

/// For each pattern, the variants with one ground position turned into a
/// wildcard, provided a ground term remains.
RelaxationDictionary default_dictionary(const CompoundQuery& query);

}  // namespace askg::kgqp
