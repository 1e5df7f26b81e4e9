#pragma once

#include <string>
#include <vector>

#include "askg/domo/document_model.hpp"

namespace askg::domo {

enum class IssueKind {
  kMalformedId,
  kParentMismatch,
  kDuplicateId,
  kEmptyHeading,
  kEmptySentence,
  kBadReference,
  kWordCountMismatch,
};

struct Issue {
  IssueKind kind;
  std::string path;  // e.g. "/2/2.1/sentence[3]"
  std::string message;
};

std::vector<Issue> validate_model(const DocumentModel& model);

/// Checks the Excerpt invariant (word_index_from <= word_index_to) and
/// that the identifying fields are present.
std::vector<Issue> validate_excerpt(const Excerpt& excerpt);

const char* to_string(IssueKind kind);

}  // namespace askg::domo
