#pragma once

#include <string>
#include <vector>

#include "askg/domo/document_model.hpp"
#include "askg/ingest/linker.hpp"
#include "askg/rdf/graph.hpp"

namespace askg::ingest {

struct EmitOptions {
  /// Also emit Paper and Section nodes with hasSection / hasSubSection /
  /// hasParagraph edges. Off by default: the plain shape carries only
  /// paragraphs, excerpts and the links between them.
  bool with_structure = false;
};

rdf::Iri paragraph_iri(const std::string& doc_id, const std::string& paragraph_id);
rdf::Iri excerpt_iri(const std::string& excerpt_id);
rdf::Iri section_iri(const std::string& doc_id, const std::string& section_id);
rdf::Iri paper_iri(const std::string& doc_id);
/// askg-data:AcademicEntity-<key>, or the mention itself when it is already
/// an absolute IRI.
rdf::Iri entity_iri(const std::string& mention);

/// Every paragraph becomes a typed node labelled with its full text; every
/// excerpt becomes a typed node with its label, sentence, mention and word
/// indices; each link adds paragraph hasExcerpt excerpt. An excerpt with an
/// empty label gets one composed from the document title, the section
/// heading of its linked paragraph and its word span.
///
/// Throws ValidationError when a link names an unknown paragraph or excerpt.
rdf::KnowledgeGraph emit_rdf(const domo::DocumentModel& model, const std::vector<ExcerptLink>& links,
                             const std::vector<domo::Excerpt>& excerpts, EmitOptions options = {});

}  // namespace askg::ingest
