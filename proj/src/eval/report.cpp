#include "askg/eval/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace askg::eval {

namespace {

std::string cell(const std::optional<double>& v) {
  if (!v) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", *v);
  return buf;
}

nlohmann::ordered_json value(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

Report build_report(std::vector<QuestionMetrics> records, std::optional<double> alpha) {
  return {std::move(records), alpha};
}

std::string report_text(const Report& report) {
  std::string out = "Internal Embedding Distance Comparison\n";
  out += "Question\tEmbedding Distance\n";
  for (const auto& r : report.rows) out += r.question + "\t" + cell(r.embedding_distance) + "\n";
  out += "\nEntity Analysis\n";
  out += "Question\tOverlap Entity Ratio\tJaccard Distance\n";
  for (const auto& r : report.rows) {
    out += r.question + "\t" + cell(r.overlap_ratio) + "\t" + cell(r.jaccard_distance) + "\n";
  }
  if (report.cronbach_alpha) out += "\nCronbach's alpha\t" + cell(report.cronbach_alpha) + "\n";
  return out;
}

std::string report_json(const Report& report) {
  nlohmann::ordered_json embedding = nlohmann::ordered_json::array();
  nlohmann::ordered_json entities = nlohmann::ordered_json::array();
  for (const auto& r : report.rows) {
    embedding.push_back({{"Question", r.question}, {"Embedding Distance", value(r.embedding_distance)}});
    entities.push_back({{"Question", r.question},
                        {"Overlap Entity Ratio", value(r.overlap_ratio)},
                        {"Jaccard Distance", value(r.jaccard_distance)}});
  }
  nlohmann::ordered_json j;
  j["Internal Embedding Distance Comparison"] = embedding;
  j["Entity Analysis"] = entities;
  j["Cronbach's alpha"] = value(report.cronbach_alpha);
  return j.dump(2) + "\n";
}

}  // namespace askg::eval
