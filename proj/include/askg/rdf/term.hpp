#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace askg::rdf {

/// Namespace bases and the vocabulary terms the pipeline emits and queries.
namespace vocab {
inline constexpr std::string_view kOnto = "https://www.anu.edu.au/onto/scholarly#";
inline constexpr std::string_view kData = "https://www.anu.edu.au/onto/scholarly/";
inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

std::string onto(std::string_view local);
std::string data(std::string_view local);

extern const std::string kType;
extern const std::string kLabel;
extern const std::string kXsdInt;
extern const std::string kXsdInteger;
extern const std::string kXsdDecimal;
extern const std::string kXsdBoolean;
extern const std::string kXsdString;

extern const std::string kPaper;
extern const std::string kSection;
extern const std::string kParagraph;
extern const std::string kExcerpt;
extern const std::string kHasSection;
extern const std::string kHasSubSection;
extern const std::string kHasParagraph;
extern const std::string kHasExcerpt;
extern const std::string kInSentence;
extern const std::string kMentions;
extern const std::string kWordIndexFrom;
extern const std::string kWordIndexTo;
extern const std::string kSectionId;

/// Local-name prefix of academic entity nodes ("AcademicEntity-prepared_data").
inline constexpr std::string_view kEntityPrefix = "AcademicEntity-";
}  // namespace vocab

struct Iri {
  std::string value;  // absolute form

  friend auto operator<=>(const Iri&, const Iri&) = default;
};

struct Literal {
  std::string lexical;
  std::optional<std::string> datatype;  // absolute IRI
  std::optional<std::string> language;

  friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// IRIs order before literals.
using Term = std::variant<Iri, Literal>;

struct Triple {
  Iri subject;
  Iri predicate;
  Term object;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

Literal lang_literal(std::string lexical, std::string language = "en");
Literal typed_literal(std::string lexical, std::string datatype);

bool is_iri(const Term& t);
const Iri* as_iri(const Term& t);
const Literal* as_literal(const Term& t);

/// Text after the last '#' or '/'.
std::string_view local_name(std::string_view iri);

/// Entity key of a node: the local name with any "AcademicEntity-" prefix
/// removed, normalized by text::entity_key.
std::string node_key(std::string_view iri);

/// Key of an entity node, or empty when the IRI is not one.
std::optional<std::string> academic_entity_key(std::string_view iri);

/// N-Triples style rendering, used in diagnostics and JSON output.
std::string to_string(const Term& t);

}  // namespace askg::rdf

template <>
struct std::hash<askg::rdf::Iri> {
  std::size_t operator()(const askg::rdf::Iri& i) const noexcept {
    return std::hash<std::string>{}(i.value);
  }
};

template <>
struct std::hash<askg::rdf::Term> {
  std::size_t operator()(const askg::rdf::Term& t) const noexcept;
};
