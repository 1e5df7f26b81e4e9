#include "askg/rdf/term.hpp"

#include "askg/text.hpp"

namespace askg::rdf {

namespace vocab {

std::string onto(std::string_view local) { return std::string(kOnto) + std::string(local); }
std::string data(std::string_view local) { return std::string(kData) + std::string(local); }

const std::string kType = std::string(kRdf) + "type";
const std::string kLabel = std::string(kRdfs) + "label";
const std::string kXsdInt = std::string(kXsd) + "int";
const std::string kXsdInteger = std::string(kXsd) + "integer";
const std::string kXsdDecimal = std::string(kXsd) + "decimal";
const std::string kXsdBoolean = std::string(kXsd) + "boolean";
const std::string kXsdString = std::string(kXsd) + "string";

const std::string kPaper = onto("Paper");
const std::string kSection = onto("Section");
const std::string kParagraph = onto("Paragraph");
const std::string kExcerpt = onto("Excerpt");
const std::string kHasSection = onto("hasSection");
const std::string kHasSubSection = onto("hasSubSection");
const std::string kHasParagraph = onto("hasParagraph");
const std::string kHasExcerpt = onto("hasExcerpt");
const std::string kInSentence = onto("inSentence");
const std::string kMentions = onto("mentions");
const std::string kWordIndexFrom = onto("wordIndexFrom");
const std::string kWordIndexTo = onto("wordIndexTo");
const std::string kSectionId = onto("sectionId");

}  // namespace vocab

Literal lang_literal(std::string lexical, std::string language) {
  return Literal{std::move(lexical), std::nullopt, std::move(language)};
}

Literal typed_literal(std::string lexical, std::string datatype) {
  return Literal{std::move(lexical), std::move(datatype), std::nullopt};
}

bool is_iri(const Term& t) { return std::holds_alternative<Iri>(t); }
const Iri* as_iri(const Term& t) { return std::get_if<Iri>(&t); }
const Literal* as_literal(const Term& t) { return std::get_if<Literal>(&t); }

std::string_view local_name(std::string_view iri) {
  const auto cut = iri.find_last_of("#/");
  return cut == std::string_view::npos ? iri : iri.substr(cut + 1);
}

std::optional<std::string> academic_entity_key(std::string_view iri) {
  const auto local = local_name(iri);
  if (local.substr(0, vocab::kEntityPrefix.size()) != vocab::kEntityPrefix) return std::nullopt;
  return text::entity_key(local.substr(vocab::kEntityPrefix.size()));
}

std::string node_key(std::string_view iri) {
  if (auto key = academic_entity_key(iri)) return *key;
  return text::entity_key(local_name(iri));
}

std::string to_string(const Term& t) {
  if (const auto* i = as_iri(t)) return "<" + i->value + ">";
  const auto& lit = std::get<Literal>(t);
  std::string out = "\"";
  for (char c : lit.lexical) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  out.push_back('"');
  if (lit.language) out += "@" + *lit.language;
  if (lit.datatype) out += "^^<" + *lit.datatype + ">";
  return out;
}

}  // namespace askg::rdf

std::size_t std::hash<askg::rdf::Term>::operator()(const askg::rdf::Term& t) const noexcept {
  std::hash<std::string> h;
  if (const auto* i = std::get_if<askg::rdf::Iri>(&t)) return h(i->value);
  const auto& lit = std::get<askg::rdf::Literal>(t);
  std::size_t seed = h(lit.lexical) ^ 0x9e3779b97f4a7c15ULL;
  if (lit.datatype) seed ^= h(*lit.datatype) + 0x9e3779b9 + (seed << 6) + (seed >> 2);
  if (lit.language) seed ^= h(*lit.language) + 0x7f4a7c15 + (seed << 6) + (seed >> 2);
  return seed;
}
