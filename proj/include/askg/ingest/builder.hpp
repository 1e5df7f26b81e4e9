#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "askg/domo/document_model.hpp"

namespace askg::ingest {

struct OutlineEntry {
  unsigned level = 1;  // 1 = top-level heading
  std::string heading;
  std::size_t offset = 0;  // byte offset of the heading in the raw text

  friend bool operator==(const OutlineEntry&, const OutlineEntry&) = default;
};

struct HeadingOutline {
  std::vector<OutlineEntry> entries;
};

/// Accepts either a JSON array of {level, heading, offset} objects or an
/// object holding that array under "entries".
HeadingOutline parse_outline_json(std::string_view json);

/// Places each blank-line-delimited block of `text` under the heading that
/// most recently precedes it, splitting blocks into sentences. Section ids
/// come from stacking per-level counters; a heading more than one level
/// deeper than its predecessor is treated as one level deeper. Text before
/// the first heading goes to a "0" section headed "Preamble". The heading
/// line itself is skipped when the text repeats it at its offset.
///
/// Throws PreconditionError when offsets are not strictly increasing or
/// fall outside the text, or a level is zero.
domo::DocumentModel build_document_model(const HeadingOutline& outline, std::string_view text,
                                         std::string doc_id = {});

}  // namespace askg::ingest
