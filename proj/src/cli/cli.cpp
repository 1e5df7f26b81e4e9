#include "askg/cli/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "askg/baseline/retriever.hpp"
#include "askg/cli/config.hpp"
#include "askg/domo/chunked_xml.hpp"
#include "askg/embed/http_embedder.hpp"
#include "askg/embed/stub_embedder.hpp"
#include "askg/error.hpp"
#include "askg/eval/entities.hpp"
#include "askg/eval/report.hpp"
#include "askg/ingest/builder.hpp"
#include "askg/ingest/emitter.hpp"
#include "askg/ingest/excerpts.hpp"
#include "askg/kgqp/pipeline.hpp"
#include "askg/llm/triples_format.hpp"
#include "askg/rdf/stats.hpp"
#include "askg/rdf/turtle.hpp"

namespace askg::cli {

namespace fs = std::filesystem;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void require_file(const std::string& path, const std::string& flag) {
  if (path.empty()) throw UsageError(flag + " is required");
  if (!fs::is_regular_file(path)) throw UsageError(flag + ": no such file: " + path);
}

void require_dir(const std::string& path, const std::string& flag) {
  if (path.empty()) throw UsageError(flag + " is required");
  if (!fs::is_directory(path)) throw UsageError(flag + ": no such directory: " + path);
}

// Flags given on the command line; unset ones leave the config value alone.
struct Flags {
  std::string config;
  std::optional<std::string> graph, corpus, question, backend, embedder, format;
  std::optional<std::size_t> top_n, diverse_k, max_depth;
  std::optional<double> threshold;
  std::string xml, outline, text, doc_id, excerpts, input, ratings;
  bool no_structure = false;
};

RunConfig resolve(const Flags& f) {
  RunConfig c;
  if (!f.config.empty()) {
    require_file(f.config, "--config");
    apply_config(parse_config(read_file(f.config)), c);
  }
  if (f.graph) c.graph = *f.graph;
  if (f.corpus) c.corpus = *f.corpus;
  if (f.backend) c.gateway.kind = *f.backend;
  if (f.embedder) c.embedder.kind = *f.embedder;
  if (f.format) c.format = *f.format;
  if (f.top_n) c.top_n = *f.top_n;
  if (f.diverse_k) c.diverse_k = *f.diverse_k;
  if (f.max_depth) c.max_depth = *f.max_depth;
  if (f.threshold) c.threshold = *f.threshold;
  check_config(c);
  return c;
}

std::unique_ptr<embed::Embedder> make_embedder(const RunConfig& c) {
  if (c.embedder.kind == "http") return std::make_unique<embed::HttpEmbedder>(c.embedder.http, c.embedder.model);
  return std::make_unique<embed::StubEmbedder>(c.embedder.dimension);
}

llm::TemplateSet templates_for(const RunConfig& c) {
  if (c.templates_dir.empty()) return llm::TemplateSet::defaults();
  require_dir(c.templates_dir, "templates_dir");
  return llm::TemplateSet::load(c.templates_dir);
}

rdf::KnowledgeGraph load_graph(const RunConfig& c) {
  require_file(c.graph, "--graph");
  return rdf::load_turtle(read_file(c.graph));
}

int cmd_ingest(const Flags& f, const RunConfig& c, std::ostream& out, std::ostream& err) {
  domo::DocumentModel model;
  if (!f.xml.empty()) {
    require_file(f.xml, "--xml");
    model = domo::parse_chunked_xml(read_file(f.xml), f.doc_id.empty() ? fs::path(f.xml).stem().string() : f.doc_id);
  } else if (!f.outline.empty() || !f.text.empty()) {
    require_file(f.outline, "--outline");
    require_file(f.text, "--text");
    model = ingest::build_document_model(ingest::parse_outline_json(read_file(f.outline)), read_file(f.text),
                                         f.doc_id.empty() ? fs::path(f.text).stem().string() : f.doc_id);
  } else {
    throw UsageError("ingest needs --xml or --outline with --text");
  }

  std::vector<domo::Excerpt> excerpts;
  std::vector<ingest::ExcerptLink> links;
  if (!f.excerpts.empty()) {
    require_file(f.excerpts, "--excerpts");
    excerpts = ingest::load_excerpts(read_file(f.excerpts));
    const auto embedder = make_embedder(c);
    links = ingest::link_excerpts(domo::paragraphs_of(model), excerpts, *embedder, c.threshold);
  }
  const auto graph = ingest::emit_rdf(model, links, excerpts, {.with_structure = !f.no_structure});
  out << rdf::save_turtle(graph);
  err << "ingested " << model.doc_id << ": " << graph.size() << " triples, " << links.size() << " of "
      << excerpts.size() << " excerpts linked\n";
  return kExitOk;
}

int cmd_link(const Flags& f, const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto graph = load_graph(c);
  require_file(f.excerpts, "--excerpts");
  const auto excerpts = ingest::load_excerpts(read_file(f.excerpts));

  std::vector<domo::Paragraph> paragraphs;
  for (const auto& node : graph.instances_of(rdf::vocab::kParagraph)) {
    const auto* label = graph.label(node);
    if (label == nullptr) continue;
    paragraphs.push_back(domo::make_paragraph(node.value, {{label->lexical, {}}}));
  }
  const auto embedder = make_embedder(c);
  const auto links = ingest::link_excerpts(paragraphs, excerpts, *embedder, c.threshold);

  // Excerpt nodes come from the emitter; links point at existing paragraph IRIs.
  std::vector<rdf::Triple> added = ingest::emit_rdf({}, {}, excerpts).triples();
  for (const auto& l : links) {
    added.push_back({rdf::Iri{l.paragraph_id}, rdf::Iri{rdf::vocab::kHasExcerpt}, ingest::excerpt_iri(l.excerpt_id)});
  }
  const auto merged = graph.merged(std::move(added));
  if (c.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& l : links) {
      j.push_back({{"excerpt_id", l.excerpt_id}, {"paragraph", l.paragraph_id}, {"similarity", l.similarity}});
    }
    out << j.dump(2) << "\n";
  } else {
    out << rdf::save_turtle(merged);
  }
  err << "linked " << links.size() << " of " << excerpts.size() << " excerpts at threshold " << c.threshold << "\n";
  return kExitOk;
}

int cmd_query(const Flags& f, const RunConfig& c, std::ostream& out, std::ostream&) {
  if (!f.question || f.question->empty()) throw UsageError("--question is required");
  if (c.diverse_k > c.top_n) throw UsageError("diverse-k must not exceed top-n");
  const auto graph = load_graph(c);
  const auto templates = templates_for(c);
  const auto gateway = llm::make_gateway(c.gateway);
  const auto embedder = make_embedder(c);

  kgqp::PipelineOptions options;
  options.top_n = c.top_n;
  options.diverse_k = c.diverse_k;
  options.max_depth = c.max_depth;
  options.top_entities = c.top_entities;
  if (!c.relaxation_dictionary.empty()) {
    require_file(c.relaxation_dictionary, "relaxation_dictionary");
    std::vector<kgqp::TriplePattern> entries;
    for (const auto& p : llm::parse_triples_response(read_file(c.relaxation_dictionary))) {
      entries.push_back(kgqp::normalize(p));
    }
    options.dictionary = kgqp::RelaxationDictionary(std::move(entries));
  }
  const auto result = kgqp::answer_question(graph, *f.question, *gateway, *embedder, options, templates);
  out << (c.format == "json" ? kgqp::provenance_json(result) : kgqp::result_text(result));
  return kExitOk;
}

int cmd_retrieve(const Flags& f, const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (!f.question || f.question->empty()) throw UsageError("--question is required");
  require_dir(c.corpus, "--corpus");

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(c.corpus)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  const baseline::ChunkOptions options{c.chunk_tokens, c.chunk_overlap};
  std::vector<baseline::Chunk> chunks;
  for (const auto& file : files) {
    auto doc = baseline::chunk_text(read_file(file.string()), options, file.stem().string());
    chunks.insert(chunks.end(), doc.begin(), doc.end());
  }
  err << files.size() << " document(s), " << chunks.size() << " chunk(s)\n";

  const auto embedder = make_embedder(c);
  const auto hits = baseline::retrieve_top_k(chunks, *f.question, *embedder, c.top_n);
  if (c.format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& h : hits) {
      j.push_back({{"chunk_id", h.chunk.chunk_id},
                   {"doc_id", h.chunk.doc_id},
                   {"start", h.chunk.start},
                   {"end", h.chunk.end},
                   {"similarity", h.similarity},
                   {"text", h.chunk.text}});
    }
    out << j.dump(2) << "\n";
  } else {
    for (const auto& h : hits) {
      char sim[32];
      std::snprintf(sim, sizeof sim, "%.4f", h.similarity);
      out << sim << "\t" << h.chunk.chunk_id << "\t" << h.chunk.text << "\n";
    }
  }
  return kExitOk;
}

std::vector<std::string> strings(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return {};
  if (j.at(key).is_string()) return {j.at(key).get<std::string>()};
  return j.at(key).get<std::vector<std::string>>();
}

int cmd_eval(const Flags& f, const RunConfig& c, std::ostream& out, std::ostream&) {
  if (f.input.empty() && f.ratings.empty()) throw UsageError("eval needs --input and/or --ratings");

  std::vector<std::string> dictionary;
  if (!c.graph.empty()) dictionary = eval::entity_dictionary(load_graph(c));

  std::vector<eval::QuestionMetrics> rows;
  if (!f.input.empty()) {
    require_file(f.input, "--input");
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(read_file(f.input));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("eval input: ") + e.what(), 1, e.byte);
    }
    const nlohmann::json& questions = doc.is_object() ? doc.at("questions") : doc;
    const auto embedder = make_embedder(c);
    std::size_t n = 0;
    try {
      for (const auto& q : questions) {
        eval::QuestionMetrics m;
        m.question = q.value("id", "Q" + std::to_string(++n));
        const auto kg_context = strings(q, "kg_context");
        const auto vector_context = strings(q, "vector_context");
        if (!kg_context.empty() && !vector_context.empty()) {
          m.embedding_distance = eval::embedding_distance(kg_context, vector_context, *embedder);
        }
        auto entities = [&](const char* list_key, const char* answer_key) -> std::optional<eval::EntitySet> {
          if (q.contains(list_key)) return eval::EntitySet(strings(q, list_key));
          if (q.contains(answer_key)) return eval::extract_entities(q.at(answer_key).get<std::string>(), dictionary);
          return std::nullopt;
        };
        const auto a = entities("kg_entities", "kg_answer");
        const auto b = entities("vector_entities", "vector_answer");
        if (a && b && !(a->empty() && b->empty())) {
          const auto o = eval::entity_overlap(*a, *b);
          m.overlap_ratio = o.overlap_ratio;
          m.jaccard_distance = o.jaccard_distance;
        }
        rows.push_back(std::move(m));
      }
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError(std::string("eval input: ") + e.what());
    }
  }

  std::optional<double> alpha;
  if (!f.ratings.empty()) {
    require_file(f.ratings, "--ratings");
    alpha = eval::cronbach_alpha(eval::parse_ratings_csv(read_file(f.ratings)));
  }
  const auto report = eval::build_report(std::move(rows), alpha);
  out << (c.format == "json" ? eval::report_json(report) : eval::report_text(report));
  return kExitOk;
}

int cmd_stats(const RunConfig& c, std::ostream& out) {
  const auto stats = rdf::graph_stats(load_graph(c));
  out << (c.format == "json" ? rdf::stats_to_json(stats) : rdf::stats_to_text(stats));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scholarly knowledge graph construction and KG-grounded question answering", "askg"};
  app.require_subcommand(1);
  Flags f;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", f.config, "key = value config file");
    sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--embedder", f.embedder, "Embedding backend")->check(CLI::IsMember({"stub", "http"}));
  };
  auto graph_opt = [&](CLI::App* sub) { sub->add_option("--graph", f.graph, "Turtle graph file"); };

  auto* ingest = app.add_subcommand("ingest", "Chunked XML or outline + text to Turtle");
  common(ingest);
  ingest->add_option("--xml", f.xml, "Chunked XML document");
  ingest->add_option("--outline", f.outline, "Heading outline JSON");
  ingest->add_option("--text", f.text, "Raw document text");
  ingest->add_option("--doc-id", f.doc_id, "Document id used in IRIs");
  ingest->add_option("--excerpts", f.excerpts, "Excerpts (JSON lines or Turtle) to link");
  ingest->add_option("--threshold", f.threshold, "Linking similarity threshold");
  ingest->add_flag("--no-structure", f.no_structure, "Omit Paper and Section nodes");

  auto* link = app.add_subcommand("link", "Link excerpts to the paragraphs of a graph");
  common(link);
  graph_opt(link);
  link->add_option("--excerpts", f.excerpts, "Excerpts (JSON lines or Turtle)");
  link->add_option("--threshold", f.threshold, "Linking similarity threshold");

  auto* query = app.add_subcommand("query", "Answer a question from the graph");
  common(query);
  graph_opt(query);
  query->add_option("--question", f.question, "Natural-language question");
  query->add_option("--top-n", f.top_n, "Keyword-frequency shortlist size");
  query->add_option("--diverse-k", f.diverse_k, "Paragraphs kept for the answer");
  query->add_option("--max-depth", f.max_depth, "Relaxation depth limit");
  query->add_option("--backend", f.backend, "Text generation backend")->check(CLI::IsMember({"stub", "http"}));

  auto* retrieve = app.add_subcommand("retrieve-baseline", "Chunk a corpus and retrieve by cosine similarity");
  common(retrieve);
  retrieve->add_option("--corpus", f.corpus, "Directory of .txt documents");
  retrieve->add_option("--question", f.question, "Query text");
  retrieve->add_option("--top-n", f.top_n, "Number of chunks to return");

  auto* evaluate = app.add_subcommand("eval", "Entity, embedding and rater-agreement metrics");
  common(evaluate);
  graph_opt(evaluate);
  evaluate->add_option("--input", f.input, "Per-question JSON records");
  evaluate->add_option("--ratings", f.ratings, "Raters x items CSV");

  auto* stats = app.add_subcommand("stats", "Graph construction metrics");
  common(stats);
  graph_opt(stats);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  try {
    const RunConfig config = resolve(f);
    if (sub == ingest) return cmd_ingest(f, config, out, err);
    if (sub == link) return cmd_link(f, config, out, err);
    if (sub == query) return cmd_query(f, config, out, err);
    if (sub == retrieve) return cmd_retrieve(f, config, out, err);
    if (sub == evaluate) return cmd_eval(f, config, out, err);
    return cmd_stats(config, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << sub->help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace askg::cli
