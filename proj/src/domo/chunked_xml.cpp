#include "askg/domo/chunked_xml.hpp"

#include <expat.h>

#include <charconv>
#include <memory>
#include <optional>

#include "askg/error.hpp"
#include "askg/text.hpp"

namespace askg::domo {
namespace {

struct RawNode {
  std::string name;
  std::optional<std::string> id;
  std::string text;
  std::vector<std::unique_ptr<RawNode>> children;
  std::vector<std::uint32_t> references;  // filled in for sentences
  std::size_t line = 0;
  std::size_t column = 0;
};

std::string where(const RawNode& node) {
  return " (line " + std::to_string(node.line) + ", column " + std::to_string(node.column) + ")";
}

class TreeBuilder {
 public:
  explicit TreeBuilder(XML_Parser parser) : parser_(parser) {}

  static void XMLCALL on_start(void* data, const XML_Char* name, const XML_Char** attrs) {
    static_cast<TreeBuilder*>(data)->start(name, attrs);
  }
  static void XMLCALL on_end(void* data, const XML_Char*) {
    static_cast<TreeBuilder*>(data)->end();
  }
  static void XMLCALL on_text(void* data, const XML_Char* s, int len) {
    static_cast<TreeBuilder*>(data)->characters(std::string_view(s, static_cast<std::size_t>(len)));
  }

  std::unique_ptr<RawNode> take_root() { return std::move(root_); }
  const std::optional<std::string>& failure() const { return failure_; }

 private:
  void fail(std::string message) {
    if (!failure_) failure_ = std::move(message);
    XML_StopParser(parser_, XML_FALSE);
  }

  void start(std::string_view name, const XML_Char** attrs) {
    if (failure_) return;
    auto node = std::make_unique<RawNode>();
    node->name = std::string(name);
    node->line = XML_GetCurrentLineNumber(parser_);
    node->column = XML_GetCurrentColumnNumber(parser_) + 1;

    if (name != "section" && name != "heading" && name != "sentence" && name != "reference") {
      fail("unknown element <" + node->name + ">" + where(*node));
      return;
    }
    for (std::size_t i = 0; attrs[i] != nullptr; i += 2) {
      if (std::string_view(attrs[i]) == "ID" && name == "section") {
        node->id = attrs[i + 1];
      } else {
        fail("unexpected attribute '" + std::string(attrs[i]) + "' on <" + node->name + ">" +
             where(*node));
        return;
      }
    }

    RawNode* parent = stack_.empty() ? nullptr : stack_.back();
    if (parent == nullptr) {
      if (name != "section") {
        fail("root element must be <section>, found <" + node->name + ">" + where(*node));
        return;
      }
    } else {
      const bool allowed = (parent->name == "section") ||
                           (parent->name == "sentence" && name == "reference");
      if (!allowed) {
        fail("<" + node->name + "> is not allowed inside <" + parent->name + ">" + where(*node));
        return;
      }
      if (name == "section" && !node->id) {
        fail("<section> without ID attribute" + where(*node));
        return;
      }
    }

    RawNode* raw = node.get();
    if (parent == nullptr) {
      root_ = std::move(node);
    } else {
      parent->children.push_back(std::move(node));
    }
    stack_.push_back(raw);
  }

  void end() {
    if (!failure_ && !stack_.empty()) stack_.pop_back();
  }

  void characters(std::string_view s) {
    if (failure_ || stack_.empty()) return;
    RawNode* node = stack_.back();
    if (node->name == "section") {
      if (!text::trim(s).empty()) {
        fail("unexpected text '" + std::string(text::trim(s)) + "' inside <section>" +
             " (line " + std::to_string(XML_GetCurrentLineNumber(parser_)) + ")");
      }
      return;
    }
    node->text.append(s);
  }

  XML_Parser parser_;
  std::unique_ptr<RawNode> root_;
  std::vector<RawNode*> stack_;
  std::optional<std::string> failure_;
};

std::uint32_t parse_reference(const RawNode& node) {
  const auto digits = text::trim(node.text);
  std::uint32_t value = 0;
  const auto* first = digits.data();
  const auto* last = digits.data() + digits.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (digits.empty() || ec != std::errc{} || ptr != last || value == 0) {
    throw ValidationError("reference '" + std::string(digits) + "' is not a positive integer" +
                          where(node));
  }
  return value;
}

// Routes every reference to its sentence: nested ones to the enclosing
// sentence, sibling ones to the most recent sentence in document order.
void attach_references(RawNode& node, RawNode*& last_sentence) {
  for (auto& child : node.children) {
    if (child->name == "sentence") {
      last_sentence = child.get();
      for (const auto& ref : child->children) child->references.push_back(parse_reference(*ref));
    } else if (child->name == "reference") {
      if (last_sentence == nullptr) {
        throw ValidationError("reference appears before any sentence" + where(*child));
      }
      last_sentence->references.push_back(parse_reference(*child));
    } else if (child->name == "section") {
      attach_references(*child, last_sentence);
    }
  }
}

Section build_section(const RawNode& raw) {
  Section section;
  section.id = std::string(text::trim(*raw.id));
  bool has_heading = false;
  for (const auto& child : raw.children) {
    if (child->name == "heading") {
      if (has_heading) throw ValidationError("section has more than one <heading>" + where(*child));
      has_heading = true;
      section.heading = text::collapse_whitespace(child->text);
    } else if (child->name == "sentence") {
      section.body.emplace_back(Sentence{text::collapse_whitespace(child->text), child->references});
    } else if (child->name == "section") {
      section.body.emplace_back(Box<Section>(build_section(*child)));
    }
  }
  return section;
}

void escape_into(std::string& out, std::string_view s, bool attribute) {
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"':
        if (attribute) {
          out += "&quot;";
          break;
        }
        [[fallthrough]];
      default: out.push_back(c);
    }
  }
}

void write_sentence(std::string& out, const Sentence& s) {
  out += "<sentence>";
  escape_into(out, s.text, false);
  out += "</sentence>\n";
  for (auto ref : s.references) out += "<reference>" + std::to_string(ref) + "</reference>\n";
}

void write_section(std::string& out, const Section& section) {
  out += "<section ID=\"";
  escape_into(out, section.id, true);
  out += "\">\n<heading>";
  escape_into(out, section.heading, false);
  out += "</heading>\n";
  for (const auto& item : section.body) {
    if (const auto* s = std::get_if<Sentence>(&item)) {
      write_sentence(out, *s);
    } else if (const auto* p = std::get_if<Paragraph>(&item)) {
      for (const auto& ps : p->sentences) write_sentence(out, ps);
    } else {
      write_section(out, *std::get<Box<Section>>(item));
    }
  }
  out += "</section>\n";
}

}  // namespace

DocumentModel parse_chunked_xml(std::string_view bytes, std::string doc_id) {
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> parser(
      XML_ParserCreate("UTF-8"), &XML_ParserFree);
  if (!parser) throw Error("cannot allocate XML parser");

  TreeBuilder builder(parser.get());
  XML_SetUserData(parser.get(), &builder);
  XML_SetElementHandler(parser.get(), &TreeBuilder::on_start, &TreeBuilder::on_end);
  XML_SetCharacterDataHandler(parser.get(), &TreeBuilder::on_text);

  const auto status = XML_Parse(parser.get(), bytes.data(), static_cast<int>(bytes.size()), XML_TRUE);
  if (builder.failure()) throw ValidationError(*builder.failure());
  if (status != XML_STATUS_OK) {
    throw ParseError(XML_ErrorString(XML_GetErrorCode(parser.get())),
                     XML_GetCurrentLineNumber(parser.get()),
                     XML_GetCurrentColumnNumber(parser.get()) + 1);
  }

  auto root = builder.take_root();
  if (!root) throw ParseError("document has no root element", 1, 1);

  RawNode* last_sentence = nullptr;
  DocumentModel model;
  model.doc_id = std::move(doc_id);
  if (root->id) {
    // A root carrying an ID is itself the single top-level section.
    attach_references(*root, last_sentence);
    model.sections.push_back(build_section(*root));
    return model;
  }

  attach_references(*root, last_sentence);
  for (const auto& child : root->children) {
    if (child->name == "heading") {
      model.title = text::collapse_whitespace(child->text);
    } else if (child->name == "section") {
      model.sections.push_back(build_section(*child));
    } else if (child->name == "sentence") {
      throw ValidationError("<sentence> outside of any identified section" + where(*child));
    }
  }
  return model;
}

std::string serialize_chunked_xml(const DocumentModel& model) {
  if (model.sections.empty() && !model.title) return "<section/>\n";
  std::string out = "<section>\n";
  if (model.title) {
    out += "<heading>";
    escape_into(out, *model.title, false);
    out += "</heading>\n";
  }
  for (const auto& section : model.sections) write_section(out, section);
  out += "</section>\n";
  return out;
}

}  // namespace askg::domo
