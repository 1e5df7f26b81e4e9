#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "askg/eval/metrics.hpp"
#include "askg/rdf/graph.hpp"

namespace askg::eval {

/// Names worth spotting in free text: the keys of AcademicEntity nodes
/// (underscores as spaces) and the labels of typed nodes that are not
/// document structure. Sorted, distinct, normalized.
std::vector<std::string> entity_dictionary(const rdf::KnowledgeGraph& graph);

/// Offline entity extraction: every run of two or more capitalized words
/// (a leading article dropped),
/// plus every dictionary name whose words occur contiguously in the text.
EntitySet extract_entities(std::string_view text, const std::vector<std::string>& dictionary = {});

}  // namespace askg::eval
