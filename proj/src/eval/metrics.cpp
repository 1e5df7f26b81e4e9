#include "askg/eval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>

#include "askg/error.hpp"
#include "askg/text.hpp"

namespace askg::eval {

std::string normalize_entity(std::string_view entity) {
  return text::to_lower(text::collapse_whitespace(entity));
}

EntitySet::EntitySet(const std::vector<std::string>& names) {
  for (const auto& n : names) {
    auto e = normalize_entity(n);
    if (!e.empty()) entities.insert(std::move(e));
  }
}

namespace {

std::size_t intersection_size(const EntitySet& a, const EntitySet& b) {
  std::size_t n = 0;
  for (const auto& e : a.entities) n += b.entities.count(e);
  return n;
}

double variance(const std::vector<double>& xs) {
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return ss / static_cast<double>(xs.size() - 1);
}

std::optional<double> parse_number(std::string_view cell) {
  const std::string s(text::trim(cell));
  if (s.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size()) return std::nullopt;
  return v;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    cells.push_back(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

}  // namespace

double jaccard_distance(const EntitySet& a, const EntitySet& b) {
  if (a.empty() && b.empty()) throw PreconditionError("entity metrics are undefined for two empty sets");
  const std::size_t inter = intersection_size(a, b);
  const std::size_t uni = a.size() + b.size() - inter;
  return 1.0 - static_cast<double>(inter) / static_cast<double>(uni);
}

double overlap_coefficient(const EntitySet& a, const EntitySet& b) {
  const std::size_t smaller = std::min(a.size(), b.size());
  if (smaller == 0) return 0.0;
  return static_cast<double>(intersection_size(a, b)) / static_cast<double>(smaller);
}

EntityOverlap entity_overlap(const EntitySet& a, const EntitySet& b) {
  const double jd = jaccard_distance(a, b);
  const std::size_t larger = std::max(a.size(), b.size());
  return {static_cast<double>(intersection_size(a, b)) / static_cast<double>(larger), jd};
}

double embedding_distance(const std::vector<std::string>& a, const std::vector<std::string>& b,
                          const embed::Embedder& embedder) {
  if (a.empty() || b.empty()) throw PreconditionError("embedding_distance needs two non-empty lists");
  auto pooled = [&](const std::vector<std::string>& texts) {
    std::vector<embed::EmbeddingVector> vs;
    for (const auto& t : texts) vs.push_back(embedder.embed(t));
    return embed::mean_pool(vs);
  };
  return embed::cosine_similarity(pooled(a), pooled(b));
}

void validate_ratings(const RatingsMatrix& r) {
  if (r.raters() < 2 || r.items() < 2) {
    throw ValidationError("ratings need at least 2 raters and 2 items");
  }
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    if (r.rows[i].size() != r.items()) {
      throw ValidationError("rater " + std::to_string(i + 1) + " has " + std::to_string(r.rows[i].size()) +
                            " ratings, expected " + std::to_string(r.items()));
    }
    for (double x : r.rows[i]) {
      if (!std::isfinite(x)) throw ValidationError("rater " + std::to_string(i + 1) + " has a non-finite rating");
    }
  }
}

double cronbach_alpha(const RatingsMatrix& r) {
  validate_ratings(r);
  // Raters are the scale components and items the observations, so k is
  // the number of raters and totals are summed per item.
  const std::size_t k = r.raters();
  double rater_variance_sum = 0.0;
  for (const auto& row : r.rows) rater_variance_sum += variance(row);
  std::vector<double> totals(r.items(), 0.0);
  for (const auto& row : r.rows)
    for (std::size_t j = 0; j < row.size(); ++j) totals[j] += row[j];
  const double total_variance = variance(totals);
  if (!(total_variance > 0.0)) throw PreconditionError("alpha undefined: item totals do not vary");
  const double kd = static_cast<double>(k);
  return kd / (kd - 1.0) * (1.0 - rater_variance_sum / total_variance);
}

RatingsMatrix parse_ratings_csv(std::string_view csv) {
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t eol = csv.find('\n', pos);
    if (eol == std::string_view::npos) eol = csv.size();
    const auto line = text::trim(csv.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (!line.empty()) lines.emplace_back(line_no, split_csv(line));
  }
  if (lines.empty()) return {};

  auto numeric = [](std::string_view c) { return parse_number(c).has_value(); };
  const auto& first = lines.front().second;
  if (!std::all_of(first.begin(), first.end(), numeric)) lines.erase(lines.begin());

  bool labelled = !lines.empty();
  for (const auto& [no, cells] : lines) labelled = labelled && !numeric(cells.front());

  RatingsMatrix m;
  for (const auto& [no, cells] : lines) {
    std::vector<double> row;
    for (std::size_t c = labelled ? 1 : 0; c < cells.size(); ++c) {
      auto v = parse_number(cells[c]);
      if (!v) throw ParseError("not a number: '" + std::string(text::trim(cells[c])) + "'", no, c + 1);
      row.push_back(*v);
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

}  // namespace askg::eval
