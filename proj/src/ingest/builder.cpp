#include "askg/ingest/builder.hpp"

#include <algorithm>

#include "json.hpp"

#include "askg/error.hpp"
#include "askg/ingest/segmenter.hpp"
#include "askg/text.hpp"

namespace askg::ingest {

namespace {

using domo::Box;
using domo::Paragraph;
using domo::Section;
using domo::Sentence;

// Blocks of text separated by lines that hold only whitespace.
std::vector<std::string_view> blocks(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t block_start = std::string_view::npos;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    if (text::trim(line).empty()) {
      if (block_start != std::string_view::npos) {
        out.push_back(text.substr(block_start, pos - block_start));
        block_start = std::string_view::npos;
      }
    } else if (block_start == std::string_view::npos) {
      block_start = pos;
    }
    pos = eol + 1;
  }
  if (block_start != std::string_view::npos) out.push_back(text.substr(block_start));
  return out;
}

void fill_paragraphs(Section& section, std::string_view text) {
  std::size_t n = 0;
  for (std::string_view block : blocks(text)) {
    std::vector<Sentence> sentences;
    for (auto& s : segment_sentences(block)) sentences.push_back({std::move(s), {}});
    if (sentences.empty()) continue;
    section.body.emplace_back(
        domo::make_paragraph(section.id + "-" + std::to_string(++n), std::move(sentences)));
  }
}

std::string_view strip_heading(std::string_view segment, const std::string& heading) {
  std::size_t lead = 0;
  while (lead < segment.size() && (segment[lead] == ' ' || segment[lead] == '\t')) ++lead;
  if (!heading.empty() && segment.substr(lead, heading.size()) == heading) {
    return segment.substr(lead + heading.size());
  }
  return segment;
}

}  // namespace

HeadingOutline parse_outline_json(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("outline: ") + e.what(), 1, e.byte);
  }
  const nlohmann::json& entries = doc.is_object() ? doc.at("entries") : doc;
  if (!entries.is_array()) throw ValidationError("outline: expected an array of entries");
  HeadingOutline outline;
  try {
    for (const auto& e : entries) {
      outline.entries.push_back({e.at("level").get<unsigned>(), e.at("heading").get<std::string>(),
                                 e.at("offset").get<std::size_t>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("outline: ") + e.what());
  }
  return outline;
}

domo::DocumentModel build_document_model(const HeadingOutline& outline, std::string_view text,
                                         std::string doc_id) {
  const auto& entries = outline.entries;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].level == 0) throw PreconditionError("outline level must be positive");
    if (entries[i].offset > text.size()) {
      throw PreconditionError("outline offset " + std::to_string(entries[i].offset) +
                              " lies beyond the text");
    }
    if (i > 0 && entries[i].offset <= entries[i - 1].offset) {
      throw PreconditionError("outline offsets must be strictly increasing");
    }
  }

  domo::DocumentModel model;
  model.doc_id = std::move(doc_id);

  const std::size_t first = entries.empty() ? text.size() : entries.front().offset;
  if (!text::trim(text.substr(0, first)).empty()) {
    Section preamble{"0", "Preamble", {}};
    fill_paragraphs(preamble, text.substr(0, first));
    model.sections.push_back(std::move(preamble));
  }

  // Sections are completed bottom-up: `open` holds the current ancestor
  // chain, and a section is attached to its parent once a heading at the
  // same or a shallower level closes it.
  std::vector<Section> open;
  std::vector<unsigned> counters;
  auto close_to = [&](std::size_t depth) {
    while (open.size() > depth) {
      Section done = std::move(open.back());
      open.pop_back();
      if (open.empty()) {
        model.sections.push_back(std::move(done));
      } else {
        open.back().body.emplace_back(Box<Section>(std::move(done)));
      }
    }
  };

  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& entry = entries[i];
    const std::size_t depth = std::min<std::size_t>(entry.level, open.size() + 1);
    close_to(depth - 1);
    counters.resize(depth, 0);
    ++counters[depth - 1];
    std::string id;
    for (std::size_t d = 0; d < depth; ++d) {
      if (d > 0) id += '.';
      id += std::to_string(counters[d]);
    }
    Section section{id, text::collapse_whitespace(entry.heading), {}};
    const std::size_t end = i + 1 < entries.size() ? entries[i + 1].offset : text.size();
    fill_paragraphs(section, strip_heading(text.substr(entry.offset, end - entry.offset), entry.heading));
    open.push_back(std::move(section));
  }
  close_to(0);
  return model;
}

}  // namespace askg::ingest
