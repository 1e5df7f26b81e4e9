#include "askg/llm/stub_gateway.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "askg/ingest/segmenter.hpp"
#include "askg/llm/triples_format.hpp"
#include "askg/text.hpp"

namespace askg::llm {

namespace {

using kgqp::QueryTerm;
using Tokens = std::vector<std::string>;

constexpr std::array<std::string_view, 23> kAux = {
    "is",  "are",   "was",   "were",  "be",     "been",  "being", "am",
    "do",  "does",  "did",   "has",   "have",   "had",   "can",   "could",
    "will", "would", "shall", "should", "may",  "might", "must"};

constexpr std::array<std::string_view, 26> kPrepositions = {
    "of",    "in",     "on",      "at",      "from",   "by",     "with",   "into",  "onto",
    "for",   "about",  "through", "via",     "within", "over",   "under",  "between",
    "against", "during", "without", "toward", "towards", "across", "upon", "after", "before"};

constexpr std::array<std::string_view, 9> kWh = {"which", "what", "whose", "who", "whom",
                                                 "where", "when",  "how",   "why"};

constexpr std::array<std::string_view, 52> kStopwords = {
    "a",     "an",    "the",   "which", "what",  "who",   "whom",  "whose", "where", "when",
    "why",   "how",   "is",    "are",   "was",   "were",  "be",    "been",  "do",    "does",
    "did",   "to",    "of",    "in",    "on",    "at",    "from",  "by",    "for",   "with",
    "and",   "or",    "it",    "this",  "that",  "these", "those", "as",    "into",  "can",
    "could", "will",  "would", "there", "their", "its",   "has",   "have",  "had",   "used",
    "use",   "any"};

template <std::size_t N>
bool in(const std::array<std::string_view, N>& set, const std::string& word) {
  const std::string lower = text::to_lower(word);
  return std::find(set.begin(), set.end(), lower) != set.end();
}

bool is_aux(const std::string& w) { return in(kAux, w); }
bool is_prep(const std::string& w) { return in(kPrepositions, w); }
bool is_to(const std::string& w) { return text::to_lower(w) == "to"; }

bool ends_with(const std::string& w, std::string_view suffix) {
  const std::string lower = text::to_lower(w);
  return lower.size() > suffix.size() + 1 && lower.ends_with(suffix);
}

bool is_verb_like(const std::string& w) {
  return is_aux(w) || ends_with(w, "ed") || (ends_with(w, "s") && !ends_with(w, "ss"));
}

bool is_verb_form(const std::string& w) { return is_aux(w) || ends_with(w, "ed") || ends_with(w, "ing"); }

Tokens question_tokens(std::string_view question) {
  Tokens out;
  for (auto& t : text::whitespace_tokens(question)) {
    while (!t.empty() && std::string_view("?.!,;:").find(t.back()) != std::string_view::npos) t.pop_back();
    if (!t.empty()) out.push_back(std::move(t));
  }
  return out;
}

// Index of the preposition that introduces the object, or npos.
std::size_t last_preposition(const Tokens& r) {
  for (std::size_t i = r.size(); i-- > 0;) {
    if (is_prep(r[i])) return i;
    if (is_to(r[i]) && i + 2 == r.size()) return i;
  }
  return std::string::npos;
}

std::string capitalize(std::string w) {
  if (!w.empty()) w[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(w[0])));
  return w;
}

QueryTerm term_of(const Tokens& words) {
  if (words.empty()) return QueryTerm::wildcard();
  return QueryTerm::ground(text::join(words, " "));
}

// Predicate and object of a clause whose subject has been removed.
std::pair<QueryTerm, QueryTerm> predicate_object(const Tokens& r) {
  if (r.empty()) return {QueryTerm::wildcard(), QueryTerm::wildcard()};
  const std::size_t prep = last_preposition(r);
  if (prep == std::string::npos || prep + 1 == r.size()) {
    std::size_t end = 1;
    while (end < r.size() && is_verb_form(r[end])) ++end;
    if (end < r.size() && is_to(r[end]) && end + 1 < r.size()) end += 2;
    return {term_of(Tokens(r.begin(), r.begin() + end)), term_of(Tokens(r.begin() + end, r.end()))};
  }
  Tokens pred{r[0]};
  if (prep == 0) return {term_of(pred), term_of(Tokens(r.begin() + 1, r.end()))};
  for (std::size_t i = 1; i < prep; ++i) {
    if (is_to(r[i]) && i + 1 < prep) {
      pred.push_back(r[i]);
      pred.push_back(r[++i]);
    } else if (is_verb_form(r[i])) {
      pred.push_back(r[i]);
    }
  }
  pred.push_back(r[prep]);
  return {term_of(pred), term_of(Tokens(r.begin() + prep + 1, r.end()))};
}

std::vector<Tokens> split_clauses(const Tokens& tokens) {
  std::vector<Tokens> clauses(1);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (text::to_lower(tokens[i]) == "and" && !clauses.back().empty()) {
      std::size_t next_and = i + 1;
      while (next_and < tokens.size() && text::to_lower(tokens[next_and]) != "and") ++next_and;
      const bool verbal = std::any_of(tokens.begin() + i + 1, tokens.begin() + next_and,
                                      [](const std::string& w) { return is_prep(w) || is_aux(w); });
      if (verbal && i + 1 < tokens.size()) {
        clauses.emplace_back();
        continue;
      }
    }
    clauses.back().push_back(tokens[i]);
  }
  return clauses;
}

}  // namespace

std::vector<kgqp::TriplePattern> heuristic_triples(std::string_view question) {
  const Tokens tokens = question_tokens(question);
  if (tokens.empty()) return {};
  const auto clauses = split_clauses(tokens);

  std::vector<kgqp::TriplePattern> out;
  QueryTerm subject = QueryTerm::wildcard();
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    Tokens rest = clauses[c];
    if (c == 0) {
      const std::string first = text::to_lower(rest.front());
      if (in(kWh, first)) {
        rest.erase(rest.begin());
        const bool determiner = first == "which" || first == "what" || first == "whose";
        if (determiner && !rest.empty() && !is_aux(rest.front())) {
          subject = QueryTerm::ground(capitalize(rest.front()));
          rest.erase(rest.begin());
        }
      } else {
        std::size_t verb = 1;
        while (verb < rest.size() && !is_verb_like(rest[verb])) ++verb;
        subject = term_of(Tokens(rest.begin(), rest.begin() + std::min(verb, rest.size())));
        rest.erase(rest.begin(), rest.begin() + std::min(verb, rest.size()));
      }
    }
    auto [predicate, object] = predicate_object(rest);
    kgqp::TriplePattern p{subject, predicate, object};
    if (p.has_ground_term()) out.push_back(std::move(p));
  }
  return out;
}

std::string best_sentence(std::string_view question, const std::vector<std::string>& paragraphs) {
  std::set<std::string> wanted;
  for (auto& w : text::word_tokens(question)) {
    if (std::find(kStopwords.begin(), kStopwords.end(), w) == kStopwords.end()) wanted.insert(w);
  }
  std::string best;
  std::size_t best_hits = 0;
  for (const auto& paragraph : paragraphs) {
    for (const auto& sentence : ingest::segment_sentences(paragraph)) {
      const auto words = text::word_tokens(sentence);
      const std::set<std::string> present(words.begin(), words.end());
      std::size_t hits = 0;
      for (const auto& w : wanted) hits += present.count(w);
      if (hits > best_hits) {
        best_hits = hits;
        best = sentence;
      }
    }
  }
  return best;
}

namespace {

// Rows "[n] text" following a "<marker>" line, up to the first blank line.
std::vector<std::pair<std::string, std::string>> numbered_rows(std::string_view prompt,
                                                               std::string_view marker) {
  std::vector<std::pair<std::string, std::string>> rows;
  std::size_t pos = prompt.find(marker);
  if (pos == std::string_view::npos) return rows;
  pos = prompt.find('\n', pos);
  while (pos != std::string_view::npos && pos < prompt.size()) {
    std::size_t eol = prompt.find('\n', pos + 1);
    if (eol == std::string_view::npos) eol = prompt.size();
    const std::string_view line = text::trim(prompt.substr(pos + 1, eol - pos - 1));
    pos = eol;
    if (line.empty()) break;
    const std::size_t close = line.find(']');
    if (line.front() == '[' && close != std::string_view::npos) {
      rows.emplace_back(std::string(line.substr(1, close - 1)),
                        std::string(text::trim(line.substr(close + 1))));
    } else if (!rows.empty()) {
      rows.back().second += " " + std::string(line);
    }
  }
  return rows;
}

std::string line_after(std::string_view prompt, std::string_view label) {
  const std::size_t pos = prompt.rfind(label);
  if (pos == std::string_view::npos) return {};
  const std::size_t start = pos + label.size();
  const std::size_t eol = prompt.find('\n', start);
  return std::string(text::trim(prompt.substr(start, eol == std::string_view::npos ? eol : eol - start)));
}

}  // namespace

std::string StubGateway::generate(const GatewayRequest& request) const {
  const std::string_view prompt = request.user;
  if (prompt.find("subject | predicate | object") != std::string_view::npos) {
    const auto triples = heuristic_triples(line_after(prompt, "Question:"));
    if (triples.empty()) return "? | ? | ?";
    return format_triples(triples);
  }
  if (prompt.find("Context:") != std::string_view::npos) {
    std::vector<std::string> paragraphs;
    for (auto& [n, body] : numbered_rows(prompt, "Context:")) paragraphs.push_back(std::move(body));
    std::string answer = best_sentence(line_after(prompt, "Question:"), paragraphs);
    return answer.empty() ? "The context does not answer the question." : answer;
  }
  if (prompt.find("Candidates:") != std::string_view::npos) {
    std::string out;
    for (const auto& [n, body] : numbered_rows(prompt, "Candidates:")) out += n + "\n";
    return out.empty() ? "none" : out;
  }
  return "No answer.";
}

}  // namespace askg::llm
