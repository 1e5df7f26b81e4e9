#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace askg::domo {

/// Heap-allocated value with deep-copy semantics; lets Section nest itself.
template <class T>
class Box {
 public:
  Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  Box(const Box& other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& other) {
    if (this != &other) ptr_ = std::make_unique<T>(*other.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;

  T& operator*() { return *ptr_; }
  const T& operator*() const { return *ptr_; }
  T* operator->() { return ptr_.get(); }
  const T* operator->() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) { return *a.ptr_ == *b.ptr_; }

 private:
  std::unique_ptr<T> ptr_;
};

struct Sentence {
  std::string text;
  std::vector<std::uint32_t> references;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Paragraph {
  std::string paragraph_id;
  std::vector<Sentence> sentences;
  std::size_t word_count = 0;

  friend bool operator==(const Paragraph&, const Paragraph&) = default;
};

/// Builds a paragraph whose word_count matches its sentences.
Paragraph make_paragraph(std::string paragraph_id, std::vector<Sentence> sentences);

struct Section;
using BodyItem = std::variant<Paragraph, Sentence, Box<Section>>;

struct Section {
  std::string id;  // dotted decimal: "1", "2.1"
  std::string heading;
  std::vector<BodyItem> body;

  friend bool operator==(const Section&, const Section&) = default;
};

struct DocumentModel {
  std::string doc_id;
  std::optional<std::string> title;
  std::vector<Section> sections;

  friend bool operator==(const DocumentModel&, const DocumentModel&) = default;
};

/// A PARSE-style span record: one academic entity mention inside a sentence.
struct Excerpt {
  std::string excerpt_id;
  std::string label;
  std::string in_sentence;
  std::string mentions;  // entity key ("prepared_data") or an absolute IRI
  std::uint64_t word_index_from = 0;
  std::uint64_t word_index_to = 0;

  friend bool operator==(const Excerpt&, const Excerpt&) = default;
};

/// Parent of a dotted id ("2.1" -> "2"); empty for top-level ids.
std::string parent_id(const std::string& id);
bool is_dotted_decimal(const std::string& id);

/// Pre-order walk over every section, with its nesting depth (0 = top level).
void for_each_section(const DocumentModel& model,
                      const std::function<void(const Section&, std::size_t depth)>& fn);

/// All sentences in document order.
std::vector<const Sentence*> sentences_in_order(const DocumentModel& model);

/// A paragraph as seen by RDF emission and linking. Explicit Paragraph
/// items map one-to-one; each maximal run of sentences placed directly in a
/// section body becomes an implicit paragraph. Implicit ids continue the
/// section's "<section-id>-<n>" numbering.
struct ParagraphView {
  std::string section_id;
  std::string paragraph_id;
  std::vector<const Sentence*> sentences;

  /// Sentence texts joined by single spaces.
  std::string text() const;
  std::size_t word_count() const;
};

std::vector<ParagraphView> paragraph_views(const DocumentModel& model);

/// Copies the views out as owning Paragraph values.
std::vector<Paragraph> paragraphs_of(const DocumentModel& model);

std::string paragraph_text(const Paragraph& paragraph);

}  // namespace askg::domo
