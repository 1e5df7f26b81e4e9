#include <gtest/gtest.h>

#include "askg/embed/stub_embedder.hpp"
#include "askg/error.hpp"
#include "askg/kgqp/answer.hpp"
#include "askg/kgqp/context.hpp"
#include "askg/kgqp/grounding.hpp"
#include "askg/kgqp/lot.hpp"
#include "askg/kgqp/pipeline.hpp"
#include "askg/kgqp/ranking.hpp"
#include "askg/kgqp/relaxation.hpp"
#include "askg/kgqp/resolver.hpp"
#include "askg/llm/stub_gateway.hpp"
#include "askg/rdf/turtle.hpp"
#include "support/oracles.hpp"

using namespace askg;
using namespace askg::kgqp;
using rdf::Iri;
using rdf::Triple;
using Q = QueryTerm;

namespace {

const std::string kToolsParagraphIri = rdf::vocab::data("Paper-0e8235511ed563-Paragraph-dd82029abfc6b2957c1f393e79ff1411");
const std::string kMelParagraphIri = rdf::vocab::data("Paper-0e8235511ed563-Paragraph-5f1c0a2d9e7b4c3a8d6e1f2a3b4c5d6e");

TriplePattern tp(const char* s, const char* p, const char* o) {
  auto term = [](const char* x) {
    const std::string v = x;
    if (v == "?") return Q::wildcard();
    if (v.size() > 1 && v[0] == '?') return Q::variable(v.substr(1));
    return Q::ground(v);
  };
  return {term(s), term(p), term(o)};
}

Iri ent(const std::string& key) { return Iri{rdf::vocab::data("AcademicEntity-" + key)}; }
Iri pred(const std::string& local) { return Iri{rdf::vocab::onto(local)}; }

rdf::KnowledgeGraph mel_graph() { return rdf::load_turtle(oracle::read_fixture("mel_kg.ttl")); }

class FixedGateway final : public llm::Gateway {
 public:
  explicit FixedGateway(std::string reply) : reply_(std::move(reply)) {}
  std::string id() const override { return "fixed"; }

 protected:
  std::string generate(const llm::GatewayRequest&) const override { return reply_; }

 private:
  std::string reply_;
};

}  // namespace

// ---- relaxation --------------------------------------------------------------

TEST(Relax, DeleteAndReplace) {
  const CompoundQuery q{{tp("a", "p", "b"), tp("c", "p", "d"), tp("e", "p", "f")}};
  EXPECT_EQ(relax(q, 2, std::nullopt), (CompoundQuery{{tp("a", "p", "b"), tp("e", "p", "f")}}));

  const CompoundQuery tool{{tp("Tool", "extracts text from", "research proposals")}};
  EXPECT_EQ(relax(tool, 1, tp("Tool", "text extracted by", "?")),
            (CompoundQuery{{tp("Tool", "text extracted by", "?")}}));
  EXPECT_EQ(to_string(relax(tool, 1, tp("Tool", "text extracted by", "?"))), "<Tool, text extracted by, ?>");
}

TEST(Relax, Preconditions) {
  const CompoundQuery one{{tp("a", "p", "b")}};
  try {
    relax(one, 1, std::nullopt);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("cannot relax below one triple"), std::string::npos);
  }
  EXPECT_THROW(relax(one, 0, tp("x", "?", "?")), PreconditionError);
  EXPECT_THROW(relax(one, 2, tp("x", "?", "?")), PreconditionError);
  EXPECT_THROW(relax(one, 1, tp("?", "?", "?x")), PreconditionError);
  EXPECT_THROW(RelaxationDictionary({tp("?", "?", "?")}), PreconditionError);
}

TEST(RelaxSet, SizesFromTheDefinition) {
  const CompoundQuery q3{{tp("a", "p", "b"), tp("c", "p", "d"), tp("e", "p", "f")}};
  const RelaxationDictionary d2({tp("x", "?", "?"), tp("?", "q", "?")});
  const auto w = relax_set(q3, d2);
  EXPECT_EQ(w.size(), 9u);
  for (const auto& r : w) {
    EXPECT_EQ(r.depth, 1u);
    ASSERT_EQ(r.edits.size(), 1u);
  }
  EXPECT_EQ(std::count_if(w.begin(), w.end(), [](const RelaxedQuery& r) { return r.edits[0].kind == Edit::Kind::kDelete; }), 3);

  EXPECT_TRUE(relax_set(CompoundQuery{{tp("a", "p", "b")}}, RelaxationDictionary{}).empty());

  const auto self = relax_set(CompoundQuery{{tp("a", "p", "b")}}, RelaxationDictionary({tp("a", "p", "b"), tp("z", "?", "?")}));
  ASSERT_EQ(self.size(), 1u);
  EXPECT_EQ(self[0].query, (CompoundQuery{{tp("z", "?", "?")}}));
}

TEST(RelaxSet, MatchesEnumerationOracle) {
  std::mt19937 rng(31);
  for (int i = 0; i < 300; ++i) {
    CompoundQuery q;
    for (std::size_t n = 1 + rng() % 4; q.size() < n;) q.patterns.push_back(oracle::random_query_pattern(rng, 2, 2));
    std::vector<TriplePattern> entries;
    for (std::size_t n = rng() % 4; entries.size() < n;) entries.push_back(oracle::random_query_pattern(rng, 2, 2));
    const RelaxationDictionary dict(entries);
    const auto w = relax_set(q, dict);
    const auto expected = oracle::one_edit_results(q.patterns, dict.entries);
    std::set<oracle::Patterns> got;
    for (const auto& r : w) got.insert(r.query.patterns);
    EXPECT_EQ(w.size(), expected.size());
    EXPECT_EQ(got, expected);
  }
}

TEST(RelaxSet, DepthTwoMatchesRecursiveGenerator) {
  const CompoundQuery q{{tp("a", "p", "b"), tp("c", "p", "d"), tp("e", "p", "f")}};
  const RelaxationDictionary dict({tp("x", "?", "?"), tp("a", "p", "b")});
  std::set<oracle::Patterns> got;
  for (const auto& first : relax_set(q, dict))
    for (const auto& second : relax_set(first, dict)) {
      EXPECT_EQ(second.depth, 2u);
      EXPECT_EQ(second.edits.size(), 2u);
      got.insert(second.query.patterns);
    }
  std::set<oracle::Patterns> expected;
  for (const auto& once : oracle::one_edit_results(q.patterns, dict.entries))
    for (const auto& twice : oracle::one_edit_results(once, dict.entries)) expected.insert(twice);
  EXPECT_EQ(got, expected);
}

TEST(RelaxSet, DefaultDictionaryWildcardsOnePosition) {
  const auto d = default_dictionary(CompoundQuery{{tp("tool", "extracts", "pdfs"), tp("?x", "p", "?")}});
  const std::set<TriplePattern> got(d.entries.begin(), d.entries.end());
  EXPECT_EQ(got, (std::set<TriplePattern>{tp("?", "extracts", "pdfs"), tp("tool", "?", "pdfs"), tp("tool", "extracts", "?")}));
}

// ---- grounding and resolution -------------------------------------------------

TEST(Grounder, KeysTypesAndLabels) {
  const auto g = mel_graph();
  const Grounder grounder(g);
  const auto tools = grounder.nodes_for("tool", false);
  const std::set<rdf::Term> got(tools.begin(), tools.end());
  EXPECT_TRUE(got.count(rdf::Term{ent("mel")}));
  EXPECT_TRUE(got.count(rdf::Term{ent("apache_tika")}));
  EXPECT_FALSE(got.count(rdf::Term{ent("couchdb")}));
  const auto by_label = grounder.nodes_for("couchdb", false);
  EXPECT_EQ(by_label.size(), 1u);
  const auto preds = grounder.predicates_for("extracts_text_from");
  ASSERT_EQ(preds.size(), 1u);
  EXPECT_EQ(preds[0], rdf::Term{pred("extractsTextFrom")});
  EXPECT_TRUE(grounder.predicates_for("is_applied_to_extract_from").empty());
}

TEST(Resolve, DirectMatchIsDepthZero) {
  const auto g = mel_graph();
  const auto ctkg = resolve_query(g, CompoundQuery{{tp("mel", "extracts_text_from", "pdf_research_proposals")}}, {});
  EXPECT_EQ(ctkg.depth, 0u);
  ASSERT_EQ(ctkg.size(), 1u);
  EXPECT_EQ(ctkg.triples[0], (Triple{ent("mel"), pred("extractsTextFrom"), ent("pdf_research_proposals")}));
}

TEST(Resolve, DeletionRescuesUnmatchableSecondPattern) {
  const auto g = mel_graph();
  const CompoundQuery q{{tp("mel", "extracts_text_from", "?x"), tp("?x", "stores_data_in", "zebra")}};
  const auto ctkg = resolve_query(g, q, {});
  EXPECT_EQ(ctkg.depth, 1u);
  // Manual match of T1 alone.
  rdf::CompoundQuery manual{{{rdf::Term{ent("mel")}, rdf::Term{pred("extractsTextFrom")}, rdf::Variable{"x"}}}};
  EXPECT_EQ(ctkg.triples, rdf::match_compound(g, manual).triples);
  ASSERT_EQ(ctkg.producing_queries.size(), 1u);
  EXPECT_EQ(ctkg.producing_queries[0].edits[0].kind, Edit::Kind::kDelete);
  EXPECT_EQ(ctkg.producing_queries[0].edits[0].position, 2u);
  EXPECT_EQ(ctkg.entity_counts.at("mel"), 1u);
}

TEST(Resolve, ExhaustionIsReported) {
  const auto g = mel_graph();
  const auto ctkg = resolve_query(g, CompoundQuery{{tp("zebra", "eats", "quasar")}}, {}, 1);
  EXPECT_TRUE(ctkg.empty());
  EXPECT_EQ(ctkg.depth, 2u);
}

TEST(Resolve, PaperQuestionRelaxesOnce) {
  const auto g = mel_graph();
  const CompoundQuery q{{tp("tool", "is_applied_to_extract_from", "pdf_research_proposals")}};
  const auto ctkg = resolve_query(g, q, default_dictionary(q));
  EXPECT_EQ(ctkg.depth, 1u);
  ASSERT_EQ(ctkg.size(), 1u);
  EXPECT_EQ(ctkg.triples[0].subject, ent("mel"));
}

// ---- ranking -----------------------------------------------------------------

TEST(Ranking, FrequencyByInspection) {
  const auto ctkg = make_ctkg({{ent("e"), pred("p"), ent("a")},
                               {ent("b"), pred("p"), ent("e")},
                               {ent("e"), pred("q"), rdf::lang_literal("lit")},
                               {ent("a"), pred("p"), ent("b")},
                               {ent("c"), pred("q"), ent("d")}});
  EXPECT_EQ(frequency("e", ctkg), 3u);
  EXPECT_EQ(frequency("zzz", ctkg), 0u);
  const auto all = make_ctkg({{ent("e"), pred("p"), ent("a")}, {ent("b"), pred("p"), ent("e")}});
  EXPECT_EQ(frequency("e", all), all.size());
}

TEST(Ranking, PurityByArithmetic) {
  const auto ctkg = make_ctkg({{ent("e"), pred("p"), ent("a")},
                               {ent("e"), pred("p"), ent("b")},
                               {ent("c"), pred("p"), ent("e")},
                               {ent("e"), pred("q"), ent("d")},
                               {ent("lonely"), pred("p"), rdf::lang_literal("x")}});
  EXPECT_DOUBLE_EQ(purity("e", ctkg, {"a", "b"}), 0.5);
  EXPECT_DOUBLE_EQ(purity("e", ctkg, {"a", "b", "c", "d"}), 1.0);
  EXPECT_DOUBLE_EQ(purity("lonely", ctkg, {"a"}), 0.0);
}

TEST(Ranking, ScoreOrderAndTies) {
  EXPECT_TRUE(rank_candidates(make_ctkg({}), {}).empty());
  const auto single = rank_candidates(make_ctkg({{ent("a"), pred("p"), rdf::lang_literal("x")}}), {});
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single[0].key, "a");

  // A: F=4, P=0.5 (co-entities q, x); B: F=3, P=1 (co-entity q). 3.0 > 2.0.
  const auto ctkg = make_ctkg({{ent("a"), pred("p1"), ent("q")},
                               {ent("a"), pred("p2"), ent("q")},
                               {ent("a"), pred("p1"), ent("x")},
                               {ent("a"), pred("p2"), ent("x")},
                               {ent("b"), pred("p1"), ent("q")},
                               {ent("b"), pred("p2"), ent("q")},
                               {ent("b"), pred("p3"), ent("q")}});
  const auto ranked = rank_candidates(ctkg, {"q"});
  ASSERT_GE(ranked.size(), 2u);
  EXPECT_EQ(ranked[0].key, "b");
  EXPECT_DOUBLE_EQ(ranked[0].score, 3.0);
  EXPECT_EQ(ranked[1].key, "a");
  EXPECT_DOUBLE_EQ(ranked[1].score, 2.0);

  // Equal scores 2.0 = 4 x 0.5 = 2 x 1.0: the higher frequency goes first.
  const auto tie = make_ctkg({{ent("a"), pred("p1"), ent("q")},
                              {ent("a"), pred("p2"), ent("q")},
                              {ent("a"), pred("p1"), ent("x")},
                              {ent("a"), pred("p2"), ent("x")},
                              {ent("b"), pred("p1"), ent("q")},
                              {ent("b"), pred("p2"), ent("q")}});
  const auto tied = rank_candidates(tie, {"q"});
  EXPECT_EQ(tied[0].key, "a");
  EXPECT_EQ(tied[1].key, "b");
}

TEST(Ranking, PermutationInvariant) {
  std::mt19937 rng(37);
  const auto g = oracle::random_graph(rng, 40);
  std::vector<Triple> ts = g.triples();
  const auto base = rank_candidates(make_ctkg(ts), {"e1", "e2"});
  for (int i = 0; i < 10; ++i) {
    std::shuffle(ts.begin(), ts.end(), rng);
    EXPECT_EQ(rank_candidates(make_ctkg(ts), {"e1", "e2"}), base);
  }
}

// ---- context selection ------------------------------------------------------

TEST(Context, ToolParagraphFrequencyFive) {
  const auto mel = mel_graph();
  const Iri p{kToolsParagraphIri};
  const auto* label = mel.label(p);
  ASSERT_NE(label, nullptr);
  const rdf::KnowledgeGraph g({{p, Iri{rdf::vocab::kType}, Iri{rdf::vocab::kParagraph}}, {p, Iri{rdf::vocab::kLabel}, *label}});
  const embed::StubEmbedder stub;
  const auto ctx = select_context(g, {"MEL"}, {"MEL", "Apache Tika"}, stub);
  ASSERT_EQ(ctx.size(), 1u);
  EXPECT_EQ(ctx[0].paragraph.value, kToolsParagraphIri);
  EXPECT_EQ(ctx[0].keyword_frequency, 5u);
  EXPECT_EQ(ctx[0].doc_id, "0e8235511ed563");
  EXPECT_EQ(select_context(g, {"MEL"}, stub)[0].keyword_frequency, 2u);
}

TEST(Context, FewerCandidatesThanK) {
  const auto g = mel_graph();
  const embed::StubEmbedder stub;
  const auto ctx = select_context(g, {"tool"}, stub);
  EXPECT_EQ(ctx.size(), 3u);
  EXPECT_THROW(select_context(g, {"tool"}, stub, {.top_n = 2, .diverse_k = 3}), PreconditionError);
  EXPECT_THROW(select_context(g, {}, stub), PreconditionError);
}

TEST(Context, DuplicatesOfSeedComeLast) {
  const std::vector<std::string> distinct = {"alpha beta gamma", "delta epsilon zeta", "eta theta iota", "kappa lambda mu",
                                             "nu xi omicron",    "pi rho sigma",        "tau upsilon phi"};
  std::vector<Triple> ts;
  auto add = [&](int n, const std::string& text) {
    const Iri p{rdf::vocab::data("Paper-d-Paragraph-" + std::to_string(n))};
    ts.push_back({p, Iri{rdf::vocab::kType}, Iri{rdf::vocab::kParagraph}});
    ts.push_back({p, Iri{rdf::vocab::kLabel}, rdf::lang_literal(text)});
  };
  add(10, "seed seed seed words");  // highest frequency
  add(11, "seed seed seed words");
  add(12, "seed seed seed words");
  for (int i = 0; i < 7; ++i) add(20 + i, "seed " + distinct[i]);
  const rdf::KnowledgeGraph g(ts);
  const embed::StubEmbedder stub;
  const auto ctx = select_context(g, {"seed"}, stub, {.top_n = 10, .diverse_k = 10});
  ASSERT_EQ(ctx.size(), 10u);
  EXPECT_EQ(ctx[0].paragraph.value, rdf::vocab::data("Paper-d-Paragraph-10"));
  EXPECT_EQ(ctx[8].paragraph.value, rdf::vocab::data("Paper-d-Paragraph-11"));
  EXPECT_EQ(ctx[9].paragraph.value, rdf::vocab::data("Paper-d-Paragraph-12"));
}

TEST(Context, DiversifyIgnoresInputOrder) {
  const auto g = mel_graph();
  const embed::StubEmbedder stub;
  auto ranked = rank_paragraphs(g, {"tool", "proposal", "review"}, {"tool", "proposal", "review"});
  ASSERT_GE(ranked.size(), 3u);
  const auto base = diversify(ranked, 3, stub);
  std::reverse(ranked.begin(), ranked.end());
  EXPECT_EQ(diversify(ranked, 3, stub), base);
}

// ---- LOT, filter and answer ---------------------------------------------------

TEST(Lot, StubExtraction) {
  const llm::StubGateway stub;
  const auto lot = extract_lot_detailed("Which tool is applied to extract text from PDFs?", stub);
  EXPECT_EQ(lot.query, (CompoundQuery{{tp("tool", "is_applied_to_extract_from", "pdfs")}}));
  EXPECT_EQ(lot.surface, (std::vector<TriplePattern>{tp("Tool", "is applied to extract from", "PDFs")}));
  EXPECT_EQ(extract_lot("Which tool extracts text from PDFs and stores data in CouchDB?", stub).size(), 2u);
  EXPECT_THROW(extract_lot("  ", stub), PreconditionError);
}

TEST(Lot, UnparseableReplyKeepsRawText) {
  const FixedGateway garbage("I think it is MEL.");
  try {
    extract_lot("Which tool?", garbage);
    FAIL();
  } catch (const UnparseableResponse& e) {
    EXPECT_EQ(e.raw(), "I think it is MEL.");
  }
}

TEST(Filter, ReplyOrderAndFallback) {
  const auto ctkg = make_ctkg({{ent("a"), pred("p"), ent("b")}, {ent("c"), pred("p"), ent("b")}});
  const auto ranked = rank_candidates(ctkg, {"b"});
  ASSERT_EQ(ranked.size(), 3u);
  const auto picked = filter_candidates("q", ranked, ctkg, FixedGateway("2\n1\n9\n2"));
  ASSERT_EQ(picked.size(), 2u);
  EXPECT_EQ(picked[0], ranked[1]);
  EXPECT_EQ(picked[1], ranked[0]);
  EXPECT_EQ(filter_candidates("q", ranked, ctkg, FixedGateway("none")), ranked);
  EXPECT_EQ(filter_candidates("q", ranked, ctkg, llm::StubGateway{}, llm::TemplateSet::defaults(), 2).size(), 2u);
}

TEST(Answer, StubAnswerNamesMel) {
  const auto g = mel_graph();
  const embed::StubEmbedder stub_embed;
  const llm::StubGateway stub;
  const auto ctx = select_context(g, {"MEL", "tool"}, stub_embed);
  const std::string q = "Which tool is applied to extract text from PDF research proposals?";
  const auto a = generate_answer(q, ctx, stub);
  EXPECT_NE(a.text.find("Metadata Extractor & Loader (MEL)"), std::string::npos) << a.text;
  EXPECT_EQ(a.provenance.size(), ctx.size());
  EXPECT_EQ(generate_answer(q, ctx, stub).text, a.text);
  EXPECT_THROW(generate_answer(q, {}, stub), PreconditionError);
}

// ---- pipeline ----------------------------------------------------------------

TEST(Pipeline, PaperQuestionEndToEnd) {
  const auto g = mel_graph();
  const embed::StubEmbedder embedder;
  const llm::StubGateway gateway;
  const auto r = answer_question(g, "Which tool is applied to extract text from PDF research proposals?", gateway, embedder);
  EXPECT_EQ(r.ctkg.depth, 1u);
  ASSERT_FALSE(r.ranked.empty());
  EXPECT_EQ(r.ranked[0].key, "mel");
  ASSERT_FALSE(r.selected.empty());
  EXPECT_EQ(r.selected[0].key, "mel");
  EXPECT_EQ(r.keywords, (std::vector<std::string>{"tool", "pdf research proposals", "MEL"}));
  std::set<std::string> ctx;
  for (const auto& p : r.context) ctx.insert(p.paragraph.value);
  EXPECT_TRUE(ctx.count(kToolsParagraphIri));
  EXPECT_TRUE(ctx.count(kMelParagraphIri));
  EXPECT_TRUE(r.answered);
  EXPECT_NE(r.answer.text.find("Metadata Extractor & Loader (MEL)"), std::string::npos);
  const auto json = provenance_json(r);
  EXPECT_NE(json.find(kToolsParagraphIri), std::string::npos);
  EXPECT_EQ(provenance_json(answer_question(g, r.question, gateway, embedder)), json);
  EXPECT_NE(result_text(r).find("Metadata Extractor"), std::string::npos);
}

TEST(Pipeline, NoMatchingParagraph) {
  const auto g = mel_graph();
  const embed::StubEmbedder embedder;
  const llm::StubGateway gateway;
  const auto r = answer_question(g, "Which quasar emits zebras?", gateway, embedder);
  EXPECT_FALSE(r.answered);
  EXPECT_TRUE(r.context.empty());
}
