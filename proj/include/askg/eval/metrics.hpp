#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "askg/embed/embedder.hpp"

namespace askg::eval {

/// Lowercased, trimmed, internal whitespace collapsed.
std::string normalize_entity(std::string_view entity);

struct EntitySet {
  std::set<std::string> entities;

  EntitySet() = default;
  /// Normalizes every name; names that normalize to "" are dropped.
  explicit EntitySet(const std::vector<std::string>& names);

  std::size_t size() const { return entities.size(); }
  bool empty() const { return entities.empty(); }
};

struct EntityOverlap {
  double overlap_ratio = 0.0;     // |a & b| / max(|a|, |b|)
  double jaccard_distance = 0.0;  // 1 - |a & b| / |a | b|
};

/// Throws PreconditionError when both sets are empty.
EntityOverlap entity_overlap(const EntitySet& a, const EntitySet& b);
double jaccard_distance(const EntitySet& a, const EntitySet& b);
/// |a & b| / min(|a|, |b|); the smaller-set variant, 0 when either is empty.
double overlap_coefficient(const EntitySet& a, const EntitySet& b);

/// Cosine similarity between the mean embeddings of two lists of texts.
/// Throws PreconditionError when either list is empty.
double embedding_distance(const std::vector<std::string>& a, const std::vector<std::string>& b,
                          const embed::Embedder& embedder);

/// Rows are raters, columns are items.
struct RatingsMatrix {
  std::vector<std::vector<double>> rows;

  std::size_t raters() const { return rows.size(); }
  std::size_t items() const { return rows.empty() ? 0 : rows.front().size(); }
};

/// Throws ValidationError unless there are at least 2 raters and 2 items,
/// every row has the same length, and every cell is finite.
void validate_ratings(const RatingsMatrix& ratings);

/// Agreement between raters: k/(k-1) * (1 - sum of per-rater variances /
/// variance of per-item totals), with k raters and n-1 sample variances.
/// Identical raters over varying items give 1. Throws
/// PreconditionError("alpha undefined ...") when the item totals do not
/// vary.
double cronbach_alpha(const RatingsMatrix& ratings);

/// Comma-separated numbers, one rater per line. A first line holding any
/// non-numeric cell is a header; a first column that is non-numeric on
/// every data line is a rater label. Both are skipped. Blank lines are
/// ignored. Throws ParseError (line) on other non-numeric cells.
RatingsMatrix parse_ratings_csv(std::string_view csv);

}  // namespace askg::eval
