#pragma once

#include <optional>
#include <string>
#include <vector>

namespace askg::eval {

/// Per-question comparison of the graph-based and baseline runs.
struct QuestionMetrics {
  std::string question;  // row label, e.g. "Q1"
  std::optional<double> embedding_distance;
  std::optional<double> overlap_ratio;
  std::optional<double> jaccard_distance;
};

struct Report {
  std::vector<QuestionMetrics> rows;
  std::optional<double> cronbach_alpha;
};

Report build_report(std::vector<QuestionMetrics> records, std::optional<double> alpha = std::nullopt);

/// Two tab-separated tables, "Question / Embedding Distance" and
/// "Question / Overlap Entity Ratio / Jaccard Distance", values to four
/// decimals ("-" when absent), then the alpha line when present.
std::string report_text(const Report& report);

/// The same rows under the same column names, at full precision.
std::string report_json(const Report& report);

}  // namespace askg::eval
