#pragma once

#include <string>
#include <string_view>

#include "askg/domo/document_model.hpp"

namespace askg::domo {

/// Parses the chunked XML interchange format:
///
///   <section>
///   <section ID="1">
///   <heading>Introduction</heading>
///   <sentence>...</sentence>
///   <reference>1</reference>
///   ...
///
/// The outer `<section>` without an ID wraps the document; a `<heading>`
/// directly inside it becomes the title. A `<reference>` nested inside a
/// `<sentence>` belongs to that sentence; a sibling `<reference>` belongs
/// to the sentence preceding it in document order. Sentence and heading
/// text is whitespace-collapsed.
///
/// Throws ParseError (with line/column) for malformed XML and
/// ValidationError for unknown elements or attributes, a nested section
/// without ID, stray text, or a reference that is not a positive integer.
DocumentModel parse_chunked_xml(std::string_view bytes, std::string doc_id = {});

/// Writes the model back out. Paragraph grouping has no element in this
/// format, so paragraphs are written as their sentences; references are
/// written as siblings following their sentence.
std::string serialize_chunked_xml(const DocumentModel& model);

}  // namespace askg::domo
