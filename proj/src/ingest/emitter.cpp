#include "askg/ingest/emitter.hpp"

#include <map>

#include "askg/error.hpp"
#include "askg/text.hpp"

namespace askg::ingest {

using rdf::Iri;
using rdf::Triple;
namespace vocab = rdf::vocab;

rdf::Iri paragraph_iri(const std::string& doc_id, const std::string& paragraph_id) {
  return {vocab::data("Paper-" + doc_id + "-Paragraph-" + paragraph_id)};
}

rdf::Iri excerpt_iri(const std::string& excerpt_id) { return {vocab::data("Excerpt-" + excerpt_id)}; }

rdf::Iri section_iri(const std::string& doc_id, const std::string& section_id) {
  return {vocab::data("Paper-" + doc_id + "-Section-" + section_id)};
}

rdf::Iri paper_iri(const std::string& doc_id) { return {vocab::data("Paper-" + doc_id)}; }

rdf::Iri entity_iri(const std::string& mention) {
  if (mention.find("://") != std::string::npos) return {mention};
  return {vocab::data(std::string(vocab::kEntityPrefix) + text::entity_key(mention))};
}

namespace {

void emit_structure(const domo::DocumentModel& model, std::vector<Triple>& out) {
  const Iri paper = paper_iri(model.doc_id);
  out.push_back({paper, {vocab::kType}, Iri{vocab::kPaper}});
  if (model.title) out.push_back({paper, {vocab::kLabel}, rdf::lang_literal(*model.title)});

  for (const auto& view : domo::paragraph_views(model)) {
    out.push_back({section_iri(model.doc_id, view.section_id), {vocab::kHasParagraph},
                   paragraph_iri(model.doc_id, view.paragraph_id)});
  }
  domo::for_each_section(model, [&](const domo::Section& s, std::size_t depth) {
    const Iri node = section_iri(model.doc_id, s.id);
    out.push_back({node, {vocab::kType}, Iri{vocab::kSection}});
    out.push_back({node, {vocab::kLabel}, rdf::lang_literal(s.heading)});
    out.push_back({node, {vocab::kSectionId}, rdf::typed_literal(s.id, vocab::kXsdString)});
    if (depth == 0) {
      out.push_back({paper, {vocab::kHasSection}, node});
    } else {
      out.push_back({section_iri(model.doc_id, domo::parent_id(s.id)), {vocab::kHasSubSection}, node});
    }
  });
}

}  // namespace

rdf::KnowledgeGraph emit_rdf(const domo::DocumentModel& model, const std::vector<ExcerptLink>& links,
                             const std::vector<domo::Excerpt>& excerpts, EmitOptions options) {
  std::vector<Triple> out;
  const auto views = domo::paragraph_views(model);

  std::map<std::string, const domo::ParagraphView*> by_id;
  for (const auto& view : views) {
    by_id.emplace(view.paragraph_id, &view);
    const Iri node = paragraph_iri(model.doc_id, view.paragraph_id);
    out.push_back({node, {vocab::kType}, Iri{vocab::kParagraph}});
    out.push_back({node, {vocab::kLabel}, rdf::lang_literal(view.text())});
  }

  std::map<std::string, const domo::Excerpt*> excerpt_by_id;
  for (const auto& e : excerpts) excerpt_by_id.emplace(e.excerpt_id, &e);

  std::map<std::string, std::string> heading_of;  // excerpt id -> section heading
  for (const auto& link : links) {
    auto p = by_id.find(link.paragraph_id);
    if (p == by_id.end() || !excerpt_by_id.contains(link.excerpt_id)) {
      throw ValidationError("link " + link.excerpt_id + " -> " + link.paragraph_id +
                            " references an unknown " +
                            (p == by_id.end() ? "paragraph" : "excerpt"));
    }
    out.push_back({paragraph_iri(model.doc_id, link.paragraph_id), {vocab::kHasExcerpt},
                   excerpt_iri(link.excerpt_id)});
    heading_of.emplace(link.excerpt_id, p->second->section_id);
  }

  std::map<std::string, std::string> section_heading;
  domo::for_each_section(model, [&](const domo::Section& s, std::size_t) {
    section_heading.emplace(s.id, s.heading);
  });

  for (const auto& e : excerpts) {
    const Iri node = excerpt_iri(e.excerpt_id);
    std::string label = e.label;
    if (label.empty()) {
      std::string heading;
      if (auto h = heading_of.find(e.excerpt_id); h != heading_of.end()) heading = section_heading[h->second];
      label = "Paper-['" + model.title.value_or("") + "'] | Section-['" + heading + "'] | Excerpt-[" +
              std::to_string(e.word_index_from) + "]-[" + std::to_string(e.word_index_to) + "]";
    }
    out.push_back({node, {vocab::kType}, Iri{vocab::kExcerpt}});
    out.push_back({node, {vocab::kLabel}, rdf::lang_literal(label)});
    out.push_back({node, {vocab::kInSentence}, rdf::typed_literal(e.in_sentence, vocab::kXsdString)});
    out.push_back({node, {vocab::kMentions}, entity_iri(e.mentions)});
    out.push_back({node, {vocab::kWordIndexFrom},
                   rdf::typed_literal(std::to_string(e.word_index_from), vocab::kXsdInt)});
    out.push_back({node, {vocab::kWordIndexTo},
                   rdf::typed_literal(std::to_string(e.word_index_to), vocab::kXsdInt)});
  }

  if (options.with_structure && !model.sections.empty()) emit_structure(model, out);
  return rdf::KnowledgeGraph(std::move(out));
}

}  // namespace askg::ingest
