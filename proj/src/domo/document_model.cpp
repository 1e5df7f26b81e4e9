#include "askg/domo/document_model.hpp"

#include "askg/text.hpp"

namespace askg::domo {

Paragraph make_paragraph(std::string paragraph_id, std::vector<Sentence> sentences) {
  Paragraph p{std::move(paragraph_id), std::move(sentences), 0};
  for (const auto& s : p.sentences) p.word_count += text::word_count(s.text);
  return p;
}

std::string parent_id(const std::string& id) {
  const auto dot = id.rfind('.');
  return dot == std::string::npos ? std::string{} : id.substr(0, dot);
}

bool is_dotted_decimal(const std::string& id) {
  if (id.empty() || id.front() == '.' || id.back() == '.') return false;
  char prev = '.';
  for (char c : id) {
    if (c == '.') {
      if (prev == '.') return false;
    } else if (c < '0' || c > '9') {
      return false;
    }
    prev = c;
  }
  return true;
}

namespace {

void walk(const Section& section, std::size_t depth,
          const std::function<void(const Section&, std::size_t)>& fn) {
  fn(section, depth);
  for (const auto& item : section.body) {
    if (const auto* child = std::get_if<Box<Section>>(&item)) walk(**child, depth + 1, fn);
  }
}

void collect_sentences(const Section& section, std::vector<const Sentence*>& out) {
  for (const auto& item : section.body) {
    if (const auto* s = std::get_if<Sentence>(&item)) {
      out.push_back(s);
    } else if (const auto* p = std::get_if<Paragraph>(&item)) {
      for (const auto& ps : p->sentences) out.push_back(&ps);
    } else {
      collect_sentences(*std::get<Box<Section>>(item), out);
    }
  }
}

void collect_views(const Section& section, std::vector<ParagraphView>& out) {
  std::size_t ordinal = 0;
  std::optional<ParagraphView> run;
  auto flush = [&] {
    if (run) out.push_back(std::move(*run));
    run.reset();
  };
  for (const auto& item : section.body) {
    if (const auto* s = std::get_if<Sentence>(&item)) {
      if (!run) {
        run = ParagraphView{section.id, section.id + "-" + std::to_string(++ordinal), {}};
      }
      run->sentences.push_back(s);
      continue;
    }
    flush();
    if (const auto* p = std::get_if<Paragraph>(&item)) {
      ++ordinal;
      ParagraphView view{section.id, p->paragraph_id, {}};
      for (const auto& ps : p->sentences) view.sentences.push_back(&ps);
      out.push_back(std::move(view));
    } else {
      collect_views(*std::get<Box<Section>>(item), out);
    }
  }
  flush();
}

}  // namespace

void for_each_section(const DocumentModel& model,
                      const std::function<void(const Section&, std::size_t)>& fn) {
  for (const auto& s : model.sections) walk(s, 0, fn);
}

std::vector<const Sentence*> sentences_in_order(const DocumentModel& model) {
  std::vector<const Sentence*> out;
  for (const auto& s : model.sections) collect_sentences(s, out);
  return out;
}

std::string ParagraphView::text() const {
  std::string out;
  for (const auto* s : sentences) {
    if (!out.empty()) out.push_back(' ');
    out += s->text;
  }
  return out;
}

std::size_t ParagraphView::word_count() const {
  std::size_t n = 0;
  for (const auto* s : sentences) n += text::word_count(s->text);
  return n;
}

std::vector<ParagraphView> paragraph_views(const DocumentModel& model) {
  std::vector<ParagraphView> out;
  for (const auto& s : model.sections) collect_views(s, out);
  return out;
}

std::vector<Paragraph> paragraphs_of(const DocumentModel& model) {
  std::vector<Paragraph> out;
  for (const auto& view : paragraph_views(model)) {
    std::vector<Sentence> sentences;
    for (const auto* s : view.sentences) sentences.push_back(*s);
    out.push_back(make_paragraph(view.paragraph_id, std::move(sentences)));
  }
  return out;
}

std::string paragraph_text(const Paragraph& paragraph) {
  std::string out;
  for (const auto& s : paragraph.sentences) {
    if (!out.empty()) out.push_back(' ');
    out += s.text;
  }
  return out;
}

}  // namespace askg::domo
