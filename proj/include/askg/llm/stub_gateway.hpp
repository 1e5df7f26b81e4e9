#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "askg/kgqp/query.hpp"
#include "askg/llm/gateway.hpp"

namespace askg::llm {

/// Offline backend whose output is a pure function of the user text. It
/// recognizes the three prompt kinds by their markers:
///
///   "subject | predicate | object"  triple extraction of the "Question:" line
///   "Context:" with "[n] text" rows  the best-matching context sentence
///   "Candidates:" with "[n] ..." rows  candidate numbers in the given order
///
/// Any other prompt gets a fixed reply.
class StubGateway final : public Gateway {
 public:
  std::string id() const override { return "stub"; }

 protected:
  std::string generate(const GatewayRequest& request) const override;
};

/// The stub's subject/verb/object reading of a question.
///
/// Trailing punctuation is dropped and the question splits into clauses at
/// "and" when the right side holds a preposition or auxiliary; later
/// clauses reuse the first clause's subject. A leading which/what/whose
/// not followed by an auxiliary makes the next word (capitalized) the
/// subject; other question words give "?". Without a question word, the
/// subject runs up to the first verb-like word (auxiliary, "-ed", or "-s"
/// but not "-ss"). The object is everything after the clause's last
/// preposition ("to" counts only right before the final word). The
/// predicate keeps the first word after the subject, auxiliaries, "-ed" and
/// "-ing" words, an infinitive "to" with its verb, and that last
/// preposition. Without a preposition the predicate is the leading verb
/// group and the rest is the object; an empty object is "?".
std::vector<kgqp::TriplePattern> heuristic_triples(std::string_view question);

/// The sentence of `paragraphs` sharing the most distinct non-stopword
/// tokens with `question`; ties go to the earlier paragraph, then the
/// earlier sentence. Empty when nothing overlaps.
std::string best_sentence(std::string_view question, const std::vector<std::string>& paragraphs);

}  // namespace askg::llm
