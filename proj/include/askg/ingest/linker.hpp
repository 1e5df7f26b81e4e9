#pragma once

#include <string>
#include <vector>

#include "askg/domo/document_model.hpp"
#include "askg/embed/embedder.hpp"

namespace askg::ingest {

struct ExcerptLink {
  std::string excerpt_id;
  std::string paragraph_id;
  double similarity = 0.0;

  friend bool operator==(const ExcerptLink&, const ExcerptLink&) = default;
};

/// Links each excerpt to the paragraph whose text is most similar to the
/// excerpt's sentence, when that similarity reaches `threshold`. Ties go
/// to the earlier paragraph. Links come back in excerpt order; excerpts
/// below the threshold are absent.
///
/// Throws PreconditionError unless 0 <= threshold <= 1.
std::vector<ExcerptLink> link_excerpts(const std::vector<domo::Paragraph>& paragraphs,
                                       const std::vector<domo::Excerpt>& excerpts,
                                       const embed::Embedder& embedder, double threshold = 0.7);

}  // namespace askg::ingest
