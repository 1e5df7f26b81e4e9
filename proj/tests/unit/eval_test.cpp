#include <gtest/gtest.h>

#include "askg/embed/stub_embedder.hpp"
#include "askg/error.hpp"
#include "askg/eval/entities.hpp"
#include "askg/eval/metrics.hpp"
#include "askg/eval/report.hpp"
#include "askg/rdf/turtle.hpp"
#include "json.hpp"
#include "support/oracles.hpp"

using namespace askg;
using namespace askg::eval;

namespace {

EntitySet set_of(unsigned mask) {
  std::vector<std::string> names;
  for (unsigned i = 0; i < 5; ++i)
    if (mask & (1u << i)) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return EntitySet(names);
}

EntitySet sized(std::size_t n, std::size_t offset) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(offset + i));
  return EntitySet(names);
}

double sample_variance(const std::vector<double>& xs) {
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return ss / static_cast<double>(xs.size() - 1);
}

// Rater variances against the variance of per-item totals.
double alpha_direct(const std::vector<std::vector<double>>& rows) {
  const double k = static_cast<double>(rows.size());
  std::vector<double> totals(rows.front().size(), 0.0);
  double parts = 0.0;
  for (const auto& r : rows) {
    parts += sample_variance(r);
    for (std::size_t j = 0; j < r.size(); ++j) totals[j] += r[j];
  }
  return k / (k - 1.0) * (1.0 - parts / sample_variance(totals));
}

}  // namespace

TEST(Entities, Normalization) {
  EXPECT_EQ(normalize_entity("  Apache   Tika\n"), "apache tika");
  const EntitySet s({"MEL", "mel ", "", "  "});
  EXPECT_EQ(s.size(), 1u);
}

TEST(Overlap, Examples) {
  const auto o = entity_overlap(EntitySet({"x", "y", "z"}), EntitySet({"y", "z", "w"}));
  EXPECT_DOUBLE_EQ(o.jaccard_distance, 0.5);
  EXPECT_DOUBLE_EQ(o.overlap_ratio, 2.0 / 3.0);
  const auto same = entity_overlap(EntitySet({"x", "y"}), EntitySet({"y", "x"}));
  EXPECT_DOUBLE_EQ(same.overlap_ratio, 1.0);
  EXPECT_DOUBLE_EQ(same.jaccard_distance, 0.0);
  EXPECT_THROW(entity_overlap(EntitySet{}, EntitySet{}), PreconditionError);
}

TEST(Overlap, TwelveAndElevenSharingOne) {
  const auto a = sized(12, 0);
  const auto b = sized(11, 11);  // shares e11 only
  const auto o = entity_overlap(a, b);
  EXPECT_NEAR(o.overlap_ratio, 0.0833, 1e-4);
  EXPECT_NEAR(o.jaccard_distance, 0.9545, 1e-4);
  EXPECT_NEAR(overlap_coefficient(a, b), 1.0 / 11.0, 1e-12);
}

TEST(Jaccard, ExhaustiveFiveElementUniverse) {
  for (unsigned a = 0; a < 32; ++a)
    for (unsigned b = 0; b < 32; ++b) {
      if (a == 0 && b == 0) continue;
      const double d = jaccard_distance(set_of(a), set_of(b));
      ASSERT_GE(d, 0.0);
      ASSERT_LE(d, 1.0);
      ASSERT_DOUBLE_EQ(d, jaccard_distance(set_of(b), set_of(a)));
      ASSERT_EQ(d == 0.0, a == b);
      ASSERT_GE(entity_overlap(set_of(a), set_of(b)).overlap_ratio, 1.0 - d - 1e-12);
      for (unsigned c = 0; c < 32; ++c) {
        if ((a == 0 && c == 0) || (b == 0 && c == 0)) continue;
        ASSERT_LE(d, jaccard_distance(set_of(a), set_of(c)) + jaccard_distance(set_of(c), set_of(b)) + 1e-12);
      }
    }
}

TEST(EmbeddingDistance, Cases) {
  const embed::StubEmbedder stub;
  EXPECT_NEAR(embedding_distance({"a tool", "graph data"}, {"a tool", "graph data"}, stub), 1.0, 1e-12);
  ASSERT_DOUBLE_EQ(oracle::dot(stub.embed("alpha"), stub.embed("omega")), 0.0);
  EXPECT_DOUBLE_EQ(embedding_distance({"alpha"}, {"omega"}, stub), 0.0);
  const std::vector<std::string> a = {"MEL extracts text", "CouchDB stores JSON", "panels review"};
  const std::vector<std::string> b = {"Apache Tika extracts", "JSON files", "reviewers score proposals"};
  std::vector<double> ma(stub.dimension(), 0.0), mb(stub.dimension(), 0.0);
  for (std::size_t i = 0; i < 3; ++i) {
    const auto va = stub.embed(a[i]), vb = stub.embed(b[i]);
    for (std::size_t j = 0; j < ma.size(); ++j) ma[j] += va[j] / 3.0, mb[j] += vb[j] / 3.0;
  }
  EXPECT_NEAR(embedding_distance(a, b, stub), oracle::plain_cosine(ma, mb), 1e-12);
  EXPECT_THROW(embedding_distance({}, b, stub), PreconditionError);
}

TEST(Alpha, ConsistentRatersGiveOne) {
  const RatingsMatrix m{{{1, 3, 5, 2}, {1, 3, 5, 2}, {1, 3, 5, 2}}};
  EXPECT_NEAR(cronbach_alpha(m), 1.0, 1e-12);
}

TEST(Alpha, SmallMatrixMatchesDirectFormula) {
  const std::vector<std::vector<double>> rows = {{3, 4, 3, 5}, {2, 4, 3, 4}, {3, 5, 4, 5}};
  EXPECT_NEAR(cronbach_alpha({rows}), alpha_direct(rows), 1e-9);
  EXPECT_NEAR(cronbach_alpha({rows}), 0.956043956043956, 1e-9);
}

TEST(Alpha, AntiCorrelatedRaters) {
  const std::vector<std::vector<double>> rows = {{1, 2, 3, 4, 5}, {5, 4, 3, 2, 2}};
  const double a = cronbach_alpha({rows});
  EXPECT_LE(a, 0.0);
  EXPECT_NEAR(a, alpha_direct(rows), 1e-9);
}

TEST(Alpha, RandomMatricesAndInvariances) {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> score(1, 5);
  int checked = 0;
  while (checked < 50) {
    std::vector<std::vector<double>> rows(2 + rng() % 4, std::vector<double>(2 + rng() % 8));
    for (auto& r : rows)
      for (auto& x : r) x = score(rng);
    RatingsMatrix m{rows};
    double a;
    try {
      a = cronbach_alpha(m);
    } catch (const PreconditionError&) {
      continue;
    }
    ++checked;
    EXPECT_NEAR(a, alpha_direct(rows), 1e-9);
    EXPECT_NEAR(a, oracle::alpha_by_covariance(rows), 1e-9);
    RatingsMatrix shifted = m, scaled = m;
    for (auto& r : shifted.rows)
      for (auto& x : r) x += 7.0;
    for (auto& r : scaled.rows)
      for (auto& x : r) x *= 2.5;
    EXPECT_NEAR(cronbach_alpha(shifted), a, 1e-9);
    EXPECT_NEAR(cronbach_alpha(scaled), a, 1e-9);
  }
}

TEST(Alpha, Errors) {
  try {
    cronbach_alpha({{{2, 2}, {3, 3}, {1, 1}}});
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("alpha undefined"), std::string::npos);
  }
  EXPECT_THROW(validate_ratings({{{1, 2}}}), ValidationError);
  EXPECT_THROW(validate_ratings({{{1, 2}, {1}}}), ValidationError);
  EXPECT_THROW(validate_ratings({{{1}, {2}}}), ValidationError);
}

TEST(Ratings, CsvWithHeaderAndLabels) {
  const auto m = parse_ratings_csv(oracle::read_fixture("ratings.csv"));
  ASSERT_EQ(m.raters(), 3u);
  ASSERT_EQ(m.items(), 5u);
  EXPECT_EQ(m.rows[1], (std::vector<double>{5, 3, 4, 2, 4}));
  EXPECT_EQ(parse_ratings_csv("1,2\n\n3,4\n").rows.size(), 2u);
  try {
    parse_ratings_csv("1,2\n3,x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ExtractEntities, CapitalizedRunsAndDictionary) {
  const auto g = rdf::load_turtle(oracle::read_fixture("mel_kg.ttl"));
  const auto dict = entity_dictionary(g);
  EXPECT_TRUE(std::binary_search(dict.begin(), dict.end(), "mel"));
  EXPECT_TRUE(std::binary_search(dict.begin(), dict.end(), "pdf research proposals"));
  EXPECT_TRUE(std::binary_search(dict.begin(), dict.end(), "apache tika"));
  const auto s = extract_entities("The Metadata Extractor handles pdf research proposals, unlike couchdb.", dict);
  EXPECT_TRUE(s.entities.count("metadata extractor"));
  EXPECT_TRUE(s.entities.count("pdf research proposals"));
  EXPECT_TRUE(s.entities.count("couchdb"));
  EXPECT_FALSE(s.entities.count("the"));
}

TEST(Report, RowsAndHeaders) {
  std::vector<QuestionMetrics> rs;
  for (int i = 1; i <= 5; ++i) rs.push_back({"Q" + std::to_string(i), 0.7 + i * 0.01, 0.1 * i, 1.0 - 0.1 * i});
  const auto text = report_text(build_report(rs, 0.867));
  EXPECT_NE(text.find("Question\tOverlap Entity Ratio\tJaccard Distance\n"), std::string::npos);
  EXPECT_NE(text.find("Question\tEmbedding Distance\n"), std::string::npos);
  const auto header_only = report_text(build_report({}, 0.867));
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n') - std::count(header_only.begin(), header_only.end(), '\n'), 10);
  EXPECT_NE(text.find("Q1\t0.1000\t0.9000"), std::string::npos) << text;
  const auto empty = report_text(build_report({}));
  EXPECT_EQ(empty.find("Q1"), std::string::npos);
  EXPECT_NE(empty.find("Jaccard Distance"), std::string::npos);
}

TEST(Report, JsonAndTextAgree) {
  std::vector<QuestionMetrics> rs = {{"Q1", 0.91214, 1.0 / 12.0, 1.0 - 1.0 / 22.0}, {"Q2", std::nullopt, 0.5, 0.25}};
  const auto report = build_report(rs);
  const auto text = report_text(report);
  const auto j = nlohmann::json::parse(report_json(report));
  auto fmt = [](const nlohmann::json& v) {
    if (v.is_null()) return std::string("-");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v.get<double>());
    return std::string(buf);
  };
  for (const auto& row : j["Internal Embedding Distance Comparison"])
    EXPECT_NE(text.find(row["Question"].get<std::string>() + "\t" + fmt(row["Embedding Distance"]) + "\n"),
              std::string::npos);
  for (const auto& row : j["Entity Analysis"])
    EXPECT_NE(text.find(row["Question"].get<std::string>() + "\t" + fmt(row["Overlap Entity Ratio"]) + "\t" +
                        fmt(row["Jaccard Distance"]) + "\n"),
              std::string::npos);
  EXPECT_EQ(j["Entity Analysis"].size(), 2u);
}
