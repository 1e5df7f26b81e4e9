#include "askg/ingest/excerpts.hpp"

#include "json.hpp"

#include "askg/error.hpp"
#include "askg/rdf/turtle.hpp"
#include "askg/text.hpp"

namespace askg::ingest {

namespace {

constexpr std::string_view kExcerptPrefix = "Excerpt-";

std::uint64_t parse_index(const rdf::Term& t, const std::string& node) {
  const rdf::Literal* lit = rdf::as_literal(t);
  if (lit != nullptr) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(lit->lexical, &used);
      if (used == lit->lexical.size()) return v;
    } catch (const std::exception&) {
    }
  }
  throw ValidationError("excerpt " + node + ": word index is not a non-negative integer");
}

}  // namespace

std::vector<domo::Excerpt> parse_excerpts_jsonl(std::string_view jsonl) {
  std::vector<domo::Excerpt> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < jsonl.size()) {
    std::size_t eol = jsonl.find('\n', pos);
    if (eol == std::string_view::npos) eol = jsonl.size();
    const std::string_view line = text::trim(jsonl.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty()) continue;

    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("excerpt record: ") + e.what(), line_no);
    }
    domo::Excerpt e;
    try {
      e.excerpt_id = j.at("excerpt_id").get<std::string>();
      e.label = j.value("label", std::string{});
      e.in_sentence = j.at("in_sentence").get<std::string>();
      e.mentions = j.at("mentions").get<std::string>();
      e.word_index_from = j.at("word_index_from").get<std::uint64_t>();
      e.word_index_to = j.at("word_index_to").get<std::uint64_t>();
    } catch (const nlohmann::json::exception& ex) {
      throw ValidationError("excerpt record on line " + std::to_string(line_no) + ": " + ex.what());
    }
    if (e.word_index_from > e.word_index_to) {
      throw ValidationError("excerpt " + e.excerpt_id + ": word_index_from exceeds word_index_to");
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string excerpts_to_jsonl(const std::vector<domo::Excerpt>& excerpts) {
  std::string out;
  for (const auto& e : excerpts) {
    nlohmann::ordered_json j;
    j["excerpt_id"] = e.excerpt_id;
    j["label"] = e.label;
    j["in_sentence"] = e.in_sentence;
    j["mentions"] = e.mentions;
    j["word_index_from"] = e.word_index_from;
    j["word_index_to"] = e.word_index_to;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::vector<domo::Excerpt> excerpts_from_graph(const rdf::KnowledgeGraph& graph) {
  using namespace rdf;
  std::vector<domo::Excerpt> out;
  for (const Iri& node : graph.instances_of(vocab::kExcerpt)) {
    domo::Excerpt e;
    std::string_view local = local_name(node.value);
    if (local.starts_with(kExcerptPrefix)) local.remove_prefix(kExcerptPrefix.size());
    e.excerpt_id = std::string(local);
    if (const Literal* label = graph.label(node)) e.label = label->lexical;

    auto single = [&](const std::string& pred) -> Term {
      auto objs = graph.objects(node, pred);
      if (objs.empty()) {
        throw ValidationError("excerpt " + node.value + " lacks " + std::string(local_name(pred)));
      }
      return objs.front();
    };
    const Term sentence = single(vocab::kInSentence);
    const Literal* lit = as_literal(sentence);
    if (lit == nullptr) throw ValidationError("excerpt " + node.value + ": inSentence is not a literal");
    e.in_sentence = lit->lexical;

    const Term mentions = single(vocab::kMentions);
    if (const Iri* iri = as_iri(mentions)) {
      e.mentions = academic_entity_key(iri->value).value_or(iri->value);
    } else {
      e.mentions = as_literal(mentions)->lexical;
    }
    e.word_index_from = parse_index(single(vocab::kWordIndexFrom), node.value);
    e.word_index_to = parse_index(single(vocab::kWordIndexTo), node.value);
    if (e.word_index_from > e.word_index_to) {
      throw ValidationError("excerpt " + node.value + ": word_index_from exceeds word_index_to");
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<domo::Excerpt> load_excerpts(std::string_view bytes) {
  const std::string_view body = text::trim(bytes);
  if (body.empty()) return {};
  if (body.front() == '{') return parse_excerpts_jsonl(bytes);
  return excerpts_from_graph(rdf::load_turtle(bytes));
}

}  // namespace askg::ingest
