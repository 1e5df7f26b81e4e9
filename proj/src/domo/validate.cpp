#include "askg/domo/validate.hpp"

#include <set>

#include "askg/text.hpp"

namespace askg::domo {
namespace {

class Validator {
 public:
  std::vector<Issue> run(const DocumentModel& model) {
    for (const auto& section : model.sections) visit(section, "", "");
    return std::move(issues_);
  }

 private:
  void add(IssueKind kind, std::string path, std::string message) {
    issues_.push_back({kind, std::move(path), std::move(message)});
  }

  void visit(const Section& section, const std::string& parent, const std::string& parent_path) {
    const std::string path = parent_path + "/" + section.id;
    if (!is_dotted_decimal(section.id)) {
      add(IssueKind::kMalformedId, path, "section id '" + section.id + "' is not dotted decimal");
    } else if (parent_id(section.id) != parent) {
      add(IssueKind::kParentMismatch, path,
          "section '" + section.id + "' is nested under '" + (parent.empty() ? "<root>" : parent) +
              "' but its id names parent '" + parent_id(section.id) + "'");
    }
    if (!seen_.insert(section.id).second) {
      add(IssueKind::kDuplicateId, path, "duplicate section id '" + section.id + "'");
    }
    if (text::trim(section.heading).empty()) {
      add(IssueKind::kEmptyHeading, path, "section has an empty heading");
    }

    std::size_t sentence_index = 0;
    for (const auto& item : section.body) {
      if (const auto* s = std::get_if<Sentence>(&item)) {
        check_sentence(*s, path + "/sentence[" + std::to_string(++sentence_index) + "]");
      } else if (const auto* p = std::get_if<Paragraph>(&item)) {
        const std::string ppath = path + "/paragraph[" + p->paragraph_id + "]";
        std::size_t words = 0;
        for (std::size_t i = 0; i < p->sentences.size(); ++i) {
          check_sentence(p->sentences[i], ppath + "/sentence[" + std::to_string(i + 1) + "]");
          words += text::word_count(p->sentences[i].text);
        }
        if (words != p->word_count) {
          add(IssueKind::kWordCountMismatch, ppath,
              "word_count " + std::to_string(p->word_count) + " but sentences hold " +
                  std::to_string(words) + " words");
        }
      } else {
        visit(*std::get<Box<Section>>(item), section.id, path);
      }
    }
  }

  void check_sentence(const Sentence& s, const std::string& path) {
    if (text::trim(s.text).empty()) add(IssueKind::kEmptySentence, path, "sentence text is empty");
    for (auto ref : s.references) {
      if (ref == 0) add(IssueKind::kBadReference, path, "reference numbers must be positive");
    }
  }

  std::set<std::string> seen_;
  std::vector<Issue> issues_;
};

}  // namespace

std::vector<Issue> validate_model(const DocumentModel& model) { return Validator{}.run(model); }

std::vector<Issue> validate_excerpt(const Excerpt& excerpt) {
  std::vector<Issue> out;
  const std::string path = "/excerpt[" + excerpt.excerpt_id + "]";
  if (excerpt.excerpt_id.empty()) {
    out.push_back({IssueKind::kMalformedId, path, "excerpt id is empty"});
  }
  if (excerpt.word_index_from > excerpt.word_index_to) {
    out.push_back({IssueKind::kBadReference, path, "word_index_from exceeds word_index_to"});
  }
  if (text::trim(excerpt.in_sentence).empty()) {
    out.push_back({IssueKind::kEmptySentence, path, "in_sentence is empty"});
  }
  return out;
}

const char* to_string(IssueKind kind) {
  switch (kind) {
    case IssueKind::kMalformedId: return "malformed-id";
    case IssueKind::kParentMismatch: return "parent-mismatch";
    case IssueKind::kDuplicateId: return "duplicate-id";
    case IssueKind::kEmptyHeading: return "empty-heading";
    case IssueKind::kEmptySentence: return "empty-sentence";
    case IssueKind::kBadReference: return "bad-reference";
    case IssueKind::kWordCountMismatch: return "word-count-mismatch";
  }
  return "unknown";
}

}  // namespace askg::domo
