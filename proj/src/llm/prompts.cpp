#include "askg/llm/prompts.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "askg/error.hpp"

namespace askg::llm {

namespace {

constexpr std::array<std::string_view, 4> kPlaceholders = {"question", "context", "candidates",
                                                           "conditions"};

constexpr std::string_view kSystemText =
    "You are a research assistant answering questions about scholarly documents.";

constexpr std::string_view kExtractText =
    "Rewrite the question as knowledge graph triples, one per line, in the form\n"
    "subject | predicate | object\n"
    "Use ? for a position that is unknown or should match loosely. Output only the triples.\n"
    "\n"
    "Question: {question}\n";

constexpr std::string_view kAnswerText =
    "Answer the question using only the numbered context paragraphs. Do not add facts that are "
    "not stated in them.\n"
    "\n"
    "Context:\n"
    "{context}\n"
    "\n"
    "Question: {question}\n"
    "Answer:";

constexpr std::string_view kFilterText =
    "Which of the candidate triples extracted from the knowledge graph best answer the question "
    "\"{question}\"?\n"
    "\n"
    "Candidates:\n"
    "{candidates}\n"
    "\n"
    "Reply with the numbers of the relevant candidates, one per line, most relevant first.";

constexpr std::string_view kParagraphQueryText =
    "PREFIX askg-onto: <https://www.anu.edu.au/onto/scholarly#>\n"
    "PREFIX rdfs: <http://www.w3.org/2000/01/rdf-schema#>\n"
    "\n"
    "SELECT ?entity ?label WHERE {\n"
    "  ?entity a askg-onto:Paragraph ;\n"
    "    rdfs:label ?label .\n"
    "  FILTER (\n"
    "    {conditions}\n"
    "  )\n"
    "}\n";

bool is_known(std::string_view name) {
  for (auto p : kPlaceholders) {
    if (p == name) return true;
  }
  return false;
}

}  // namespace

TemplateSet TemplateSet::defaults() {
  TemplateSet t;
  t.set(std::string(templates::kSystem), std::string(kSystemText));
  t.set(std::string(templates::kExtractTriples), std::string(kExtractText));
  t.set(std::string(templates::kAnswer), std::string(kAnswerText));
  t.set(std::string(templates::kFilterCandidates), std::string(kFilterText));
  t.set(std::string(templates::kParagraphQuery), std::string(kParagraphQueryText));
  return t;
}

TemplateSet TemplateSet::load(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw PreconditionError("template directory not found: " + dir.string());
  }
  TemplateSet t = defaults();
  for (auto& [name, text] : t.entries_) {
    const auto file = dir / (name + ".txt");
    if (!std::filesystem::is_regular_file(file)) continue;
    std::ifstream in(file, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return t;
}

const std::string& TemplateSet::get(std::string_view name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw PreconditionError("unknown template: " + std::string(name));
  return it->second;
}

void TemplateSet::set(std::string name, std::string text) { entries_[std::move(name)] = std::move(text); }

std::string render(std::string_view tmpl, const std::map<std::string, std::string>& values) {
  std::string out;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl[i] == '{') {
      const auto close = tmpl.find('}', i + 1);
      if (close != std::string_view::npos) {
        const std::string name(tmpl.substr(i + 1, close - i - 1));
        if (auto it = values.find(name); it != values.end()) {
          out += it->second;
          i = close + 1;
          continue;
        }
        if (is_known(name)) throw PreconditionError("template needs a value for {" + name + "}");
      }
    }
    out.push_back(tmpl[i++]);
  }
  return out;
}

}  // namespace askg::llm
