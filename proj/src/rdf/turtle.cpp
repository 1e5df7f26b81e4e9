#include "askg/rdf/turtle.hpp"

#include <algorithm>
#include <optional>

#include "askg/error.hpp"

namespace askg::rdf {

const PrefixMap& default_prefixes() {
  static const PrefixMap prefixes{
      {"askg-data", std::string(vocab::kData)},
      {"askg-onto", std::string(vocab::kOnto)},
      {"rdf", std::string(vocab::kRdf)},
      {"rdfs", std::string(vocab::kRdfs)},
      {"xsd", std::string(vocab::kXsd)},
  };
  return prefixes;
}

namespace {

bool is_pn_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  return u >= 0x80 || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '_' || c == '-' || c == '.';
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

class TurtleReader {
 public:
  TurtleReader(std::string_view input, PrefixMap prefixes)
      : in_(input), prefixes_(std::move(prefixes)) {}

  std::vector<Triple> run() {
    skip_ws();
    while (!at_end()) {
      statement();
      skip_ws();
    }
    return std::move(out_);
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column()); }

  std::size_t column() const { return pos_ - line_start_ + 1; }
  bool at_end() const { return pos_ >= in_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < in_.size() ? in_[pos_ + ahead] : '\0';
  }
  char get() {
    const char c = in_[pos_++];
    if (c == '\n') {
      ++line_;
      line_start_ = pos_;
    }
    return c;
  }

  void skip_ws() {
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        get();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') get();
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    get();
  }

  bool keyword_ahead(std::string_view word, bool case_insensitive) const {
    if (in_.size() - pos_ < word.size()) return false;
    for (std::size_t i = 0; i < word.size(); ++i) {
      char a = in_[pos_ + i];
      char b = word[i];
      if (case_insensitive) {
        a = static_cast<char>(std::tolower(static_cast<unsigned char>(a)));
        b = static_cast<char>(std::tolower(static_cast<unsigned char>(b)));
      }
      if (a != b) return false;
    }
    const char after = pos_ + word.size() < in_.size() ? in_[pos_ + word.size()] : ' ';
    return !is_pn_char(after) && after != ':';
  }

  void statement() {
    if (peek() == '@') {
      if (keyword_ahead("@prefix", false)) {
        pos_ += 7;
        prefix_directive();
        expect('.');
        return;
      }
      if (keyword_ahead("@base", false)) fail("@base is not supported");
      fail("unknown directive");
    }
    if (keyword_ahead("PREFIX", true)) {
      pos_ += 6;
      prefix_directive();
      return;
    }
    if (keyword_ahead("BASE", true)) fail("BASE is not supported");

    const Iri subject = subject_term();
    predicate_object_list(subject);
    expect('.');
  }

  void prefix_directive() {
    skip_ws();
    std::string label;
    while (!at_end() && peek() != ':' && is_pn_char(peek())) label.push_back(get());
    if (peek() != ':') fail("expected ':' after prefix label");
    get();
    skip_ws();
    if (peek() != '<') fail("expected IRI in prefix declaration");
    prefixes_[label] = iri_ref();
  }

  Iri subject_term() {
    skip_ws();
    const char c = peek();
    if (c == '"' || c == '\'') fail("literal in subject position");
    return Iri{iri_like()};
  }

  void predicate_object_list(const Iri& subject) {
    while (true) {
      skip_ws();
      Iri predicate;
      if (peek() == 'a' && !is_pn_char(peek(1)) && peek(1) != ':') {
        get();
        predicate = Iri{vocab::kType};
      } else {
        predicate = Iri{iri_like()};
      }
      object_list(subject, predicate);
      skip_ws();
      if (peek() != ';') return;
      while (peek() == ';') {
        get();
        skip_ws();
      }
      if (peek() == '.' || at_end()) return;  // trailing ';' before '.'
    }
  }

  void object_list(const Iri& subject, const Iri& predicate) {
    while (true) {
      out_.push_back(Triple{subject, predicate, object_term()});
      skip_ws();
      if (peek() != ',') return;
      get();
    }
  }

  Term object_term() {
    skip_ws();
    const char c = peek();
    if (c == '"' || c == '\'') return literal();
    if ((c >= '0' && c <= '9') || ((c == '-' || c == '+') && peek(1) >= '0' && peek(1) <= '9')) {
      return numeric();
    }
    if (keyword_ahead("true", false) || keyword_ahead("false", false)) {
      const bool t = peek() == 't';
      pos_ += t ? 4 : 5;
      return typed_literal(t ? "true" : "false", vocab::kXsdBoolean);
    }
    return Iri{iri_like()};
  }

  std::string iri_like() {
    skip_ws();
    const char c = peek();
    if (at_end()) fail("unexpected end of input");
    if (c == '<') return iri_ref();
    if (c == '_' && peek(1) == ':') fail("blank nodes are not supported");
    if (c == '[') fail("blank nodes are not supported");
    if (c == '(') fail("collections are not supported");
    return prefixed_name();
  }

  std::string iri_ref() {
    get();  // '<'
    std::string iri;
    while (true) {
      if (at_end()) fail("unterminated IRI");
      const char c = get();
      if (c == '>') break;
      if (c == '\n' || c == ' ') fail("whitespace inside IRI");
      if (c == '\\') {
        iri_escape(iri);
        continue;
      }
      iri.push_back(c);
    }
    return iri;
  }

  void iri_escape(std::string& out) {
    const char kind = at_end() ? '\0' : get();
    if (kind == 'u' || kind == 'U') {
      out_codepoint(out, kind == 'u' ? 4 : 8);
      return;
    }
    fail("invalid escape in IRI");
  }

  void out_codepoint(std::string& out, int digits) {
    std::uint32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
      if (at_end()) fail("truncated unicode escape");
      const char h = get();
      cp <<= 4;
      if (h >= '0' && h <= '9') cp |= static_cast<std::uint32_t>(h - '0');
      else if (h >= 'a' && h <= 'f') cp |= static_cast<std::uint32_t>(h - 'a' + 10);
      else if (h >= 'A' && h <= 'F') cp |= static_cast<std::uint32_t>(h - 'A' + 10);
      else fail("invalid hex digit in unicode escape");
    }
    append_utf8(out, cp);
  }

  std::string prefixed_name() {
    const std::size_t start_line = line_;
    const std::size_t start_col = column();
    std::string label;
    while (!at_end() && peek() != ':' && is_pn_char(peek())) label.push_back(get());
    if (peek() != ':') {
      if (label.empty()) fail(std::string("unexpected character '") + peek() + "'");
      fail("expected prefixed name, found '" + label + "'");
    }
    get();
    std::string local;
    while (!at_end()) {
      const char c = peek();
      if (is_pn_char(c) || c == ':') {
        local.push_back(get());
      } else if (c == '\\' && pos_ + 1 < in_.size()) {
        get();
        local.push_back(get());
      } else if (c == '%' && pos_ + 2 < in_.size()) {
        local.push_back(get());
        local.push_back(get());
        local.push_back(get());
      } else {
        break;
      }
    }
    // A trailing '.' ends the statement, it is not part of the name.
    while (!local.empty() && local.back() == '.') {
      local.pop_back();
      --pos_;
    }
    const auto it = prefixes_.find(label);
    if (it == prefixes_.end()) {
      throw ParseError("unknown prefix '" + label + ":'", start_line, start_col);
    }
    return it->second + local;
  }

  Term literal() {
    const char quote = get();
    if (peek() == quote && peek(1) == quote) fail("long string literals are not supported");
    std::string lexical;
    while (true) {
      if (at_end()) fail("unterminated string literal");
      if (peek() == '\n') fail("newline inside string literal");
      const char c = get();
      if (c == quote) break;
      if (c == '\\') {
        if (at_end()) fail("unterminated escape");
        const char e = get();
        switch (e) {
          case 't': lexical.push_back('\t'); break;
          case 'n': lexical.push_back('\n'); break;
          case 'r': lexical.push_back('\r'); break;
          case 'b': lexical.push_back('\b'); break;
          case 'f': lexical.push_back('\f'); break;
          case '"': lexical.push_back('"'); break;
          case '\'': lexical.push_back('\''); break;
          case '\\': lexical.push_back('\\'); break;
          case 'u': out_codepoint(lexical, 4); break;
          case 'U': out_codepoint(lexical, 8); break;
          default: fail(std::string("invalid escape '\\") + e + "'");
        }
        continue;
      }
      lexical.push_back(c);
    }
    if (peek() == '@') {
      get();
      std::string lang;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) {
        lang.push_back(get());
      }
      if (lang.empty()) fail("empty language tag");
      return lang_literal(std::move(lexical), std::move(lang));
    }
    if (peek() == '^' && peek(1) == '^') {
      pos_ += 2;
      return typed_literal(std::move(lexical), iri_like());
    }
    return Literal{std::move(lexical), std::nullopt, std::nullopt};
  }

  Term numeric() {
    std::string digits;
    if (peek() == '+' || peek() == '-') digits.push_back(get());
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(get());
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      digits.push_back(get());
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(get());
      return typed_literal(std::move(digits), vocab::kXsdDecimal);
    }
    return typed_literal(std::move(digits), vocab::kXsdInteger);
  }

  std::string_view in_;
  PrefixMap prefixes_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
  std::vector<Triple> out_;
};

bool writable_local(std::string_view local) {
  if (local.empty()) return true;
  const char first = local.front();
  if (first == '-' || first == '.') return false;
  if (local.back() == '.') return false;
  return std::all_of(local.begin(), local.end(), is_pn_char);
}

std::string write_iri(const std::string& iri) {
  std::string_view best_label;
  std::size_t best_len = 0;
  for (const auto& [label, ns] : default_prefixes()) {
    if (ns.size() > best_len && iri.compare(0, ns.size(), ns) == 0 &&
        writable_local(std::string_view(iri).substr(ns.size()))) {
      best_label = label;
      best_len = ns.size();
    }
  }
  if (best_len > 0) return std::string(best_label) + ":" + iri.substr(best_len);
  return "<" + iri + ">";
}

std::string write_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  return out + "\"";
}

}  // namespace

std::vector<Triple> parse_turtle(std::string_view bytes, PrefixMap prefixes) {
  return TurtleReader(bytes, std::move(prefixes)).run();
}

KnowledgeGraph load_turtle(std::string_view bytes) { return KnowledgeGraph(parse_turtle(bytes)); }

std::string turtle_term(const Term& term) {
  if (const auto* i = as_iri(term)) return write_iri(i->value);
  const auto& lit = std::get<Literal>(term);
  std::string out = write_string(lit.lexical);
  if (lit.language) out += "@" + *lit.language;
  if (lit.datatype) out += "^^" + write_iri(*lit.datatype);
  return out;
}

std::string save_turtle(const KnowledgeGraph& graph) {
  std::string out;
  for (const auto& [label, ns] : default_prefixes()) {
    out += "@prefix " + label + ": <" + ns + "> .\n";
  }

  const auto& triples = graph.triples();
  std::size_t i = 0;
  while (i < triples.size()) {
    const Iri& subject = triples[i].subject;
    std::size_t end = i;
    while (end < triples.size() && triples[end].subject == subject) ++end;

    // Triples are already sorted by predicate IRI then object; only
    // rdf:type has to be pulled to the front.
    std::vector<const Triple*> block;
    for (std::size_t k = i; k < end; ++k) block.push_back(&triples[k]);
    std::stable_partition(block.begin(), block.end(),
                          [](const Triple* t) { return t->predicate.value == vocab::kType; });

    out += "\n" + write_iri(subject.value);
    for (std::size_t k = 0; k < block.size(); ++k) {
      const bool same_predicate = k > 0 && block[k]->predicate == block[k - 1]->predicate;
      if (same_predicate) {
        out += ",\n        ";
      } else {
        if (k > 0) out += " ;\n    ";
        else out += " ";
        out += block[k]->predicate.value == vocab::kType ? std::string("a")
                                                         : write_iri(block[k]->predicate.value);
        out += " ";
      }
      out += turtle_term(block[k]->object);
    }
    out += " .\n";
    i = end;
  }
  return out;
}

}  // namespace askg::rdf
