#include "askg/llm/triples_format.hpp"

#include <cctype>

#include "askg/error.hpp"
#include "askg/text.hpp"

namespace askg::llm {

namespace {

using kgqp::QueryTerm;

bool is_variable_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && c != '_') return false;
  }
  return true;
}

QueryTerm parse_field(std::string_view field, std::size_t line) {
  if (field == "?") return QueryTerm::wildcard();
  if (field.front() == '?') {
    if (!is_variable_name(field.substr(1))) {
      throw ParseError("bad variable name '" + std::string(field) + "'", line);
    }
    return QueryTerm::variable(std::string(field.substr(1)));
  }
  return QueryTerm::ground(std::string(field));
}

void check_writable(const QueryTerm& t) {
  if (t.kind == QueryTerm::Kind::kVariable && !is_variable_name(t.value)) {
    throw PreconditionError("bad variable name '" + t.value + "'");
  }
  if (!t.is_ground()) return;
  if (t.value.empty() || t.value != text::trim(t.value) || t.value.front() == '?' ||
      t.value.starts_with("- ") || t.value.starts_with("* ") ||
      t.value.find_first_of("|\r\n") != std::string::npos) {
    throw PreconditionError("term cannot be written as a triple field: '" + t.value + "'");
  }
}

}  // namespace

std::vector<kgqp::TriplePattern> parse_triples_response(std::string_view text) {
  std::vector<kgqp::TriplePattern> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text::trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line.starts_with("- ") || line.starts_with("* ")) line = text::trim(line.substr(2));

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t bar = line.find('|', start);
      fields.push_back(text::trim(line.substr(start, bar == std::string_view::npos ? bar : bar - start)));
      if (bar == std::string_view::npos) break;
      start = bar + 1;
    }
    if (fields.size() != 3) {
      throw ParseError("expected 3 fields separated by '|', got " + std::to_string(fields.size()),
                       line_no);
    }
    for (auto f : fields) {
      if (f.empty()) throw ParseError("empty triple field", line_no);
    }
    kgqp::TriplePattern p{parse_field(fields[0], line_no), parse_field(fields[1], line_no),
                          parse_field(fields[2], line_no)};
    if (!p.has_ground_term()) throw ParseError("triple has no ground term", line_no);
    out.push_back(std::move(p));
  }
  return out;
}

std::string format_triples(const std::vector<kgqp::TriplePattern>& patterns) {
  std::string out;
  for (const auto& p : patterns) {
    check_writable(p.subject);
    check_writable(p.predicate);
    check_writable(p.object);
    out += kgqp::to_string(p.subject) + " | " + kgqp::to_string(p.predicate) + " | " +
           kgqp::to_string(p.object) + "\n";
  }
  return out;
}

}  // namespace askg::llm
