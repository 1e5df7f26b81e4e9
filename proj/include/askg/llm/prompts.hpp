#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace askg::llm {

namespace templates {
inline constexpr std::string_view kSystem = "system";
inline constexpr std::string_view kExtractTriples = "extract_triples";
inline constexpr std::string_view kAnswer = "answer";
inline constexpr std::string_view kFilterCandidates = "filter_candidates";
inline constexpr std::string_view kParagraphQuery = "paragraph_query";
}  // namespace templates

/// Named prompt templates with {question}, {context}, {candidates} and
/// {conditions} placeholders. Built-in defaults can be overridden by
/// <name>.txt files in a directory.
class TemplateSet {
 public:
  static TemplateSet defaults();
  /// Defaults, replaced by any <name>.txt present in `dir`. Throws
  /// PreconditionError when `dir` is not a directory.
  static TemplateSet load(const std::filesystem::path& dir);

  /// Throws PreconditionError for an unknown name.
  const std::string& get(std::string_view name) const;
  void set(std::string name, std::string text);

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

/// Substitutes each {name} placeholder for which `values` holds a value.
/// A known placeholder without a value is a PreconditionError; other brace
/// groups are copied as is, and substituted text is not rescanned.
std::string render(std::string_view tmpl, const std::map<std::string, std::string>& values);

}  // namespace askg::llm
