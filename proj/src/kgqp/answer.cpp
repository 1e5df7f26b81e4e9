#include "askg/kgqp/answer.hpp"

#include <cctype>
#include <set>

#include "askg/error.hpp"
#include "askg/text.hpp"

namespace askg::kgqp {

namespace {

std::string triple_text(const rdf::Triple& t) {
  return std::string(rdf::local_name(t.subject.value)) + " | " +
         std::string(rdf::local_name(t.predicate.value)) + " | " +
         (rdf::is_iri(t.object) ? std::string(rdf::local_name(std::get<rdf::Iri>(t.object).value))
                                : text::collapse_whitespace(std::get<rdf::Literal>(t.object).lexical));
}

std::vector<std::size_t> numbers_in(std::string_view reply) {
  std::vector<std::size_t> out;
  std::size_t i = 0;
  while (i < reply.size()) {
    if (!std::isdigit(static_cast<unsigned char>(reply[i]))) {
      ++i;
      continue;
    }
    std::size_t v = 0;
    while (i < reply.size() && std::isdigit(static_cast<unsigned char>(reply[i]))) {
      v = v * 10 + static_cast<std::size_t>(reply[i] - '0');
      if (v > 1'000'000) v = 1'000'000;
      ++i;
    }
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<RankedEntity> filter_candidates(std::string_view question,
                                            const std::vector<RankedEntity>& ranked,
                                            const CandidateTripleSet& ctkg, const llm::Gateway& gateway,
                                            const llm::TemplateSet& templates, std::size_t limit) {
  const std::size_t n = std::min(limit, ranked.size());
  if (n == 0) return {};

  std::string candidates;
  for (std::size_t i = 0; i < n; ++i) {
    std::string facts;
    for (const auto& t : ctkg.triples) {
      const auto* o = rdf::as_iri(t.object);
      if (t.subject == ranked[i].iri || (o != nullptr && *o == ranked[i].iri)) {
        facts += facts.empty() ? "" : "; ";
        facts += triple_text(t);
      }
    }
    candidates += "[" + std::to_string(i + 1) + "] " + ranked[i].key + ": " + facts + "\n";
  }
  candidates.pop_back();

  llm::GatewayRequest request;
  request.system = templates.get(llm::templates::kSystem);
  request.user = llm::render(templates.get(llm::templates::kFilterCandidates),
                             {{"question", text::collapse_whitespace(question)}, {"candidates", candidates}});
  const auto reply = gateway.complete(request);

  std::vector<RankedEntity> out;
  std::set<std::size_t> used;
  for (std::size_t k : numbers_in(reply.text)) {
    if (k >= 1 && k <= n && used.insert(k).second) out.push_back(ranked[k - 1]);
  }
  if (out.empty()) out.assign(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(n));
  return out;
}

Answer generate_answer(std::string_view question, const std::vector<ScoredParagraph>& context,
                       const llm::Gateway& gateway, const llm::TemplateSet& templates) {
  if (context.empty()) throw PreconditionError("answer generation needs at least one context paragraph");
  const std::string q = text::collapse_whitespace(question);
  if (q.empty()) throw PreconditionError("question is empty");

  Answer answer;
  std::string rendered;
  for (std::size_t i = 0; i < context.size(); ++i) {
    if (i > 0) rendered += '\n';
    rendered += "[" + std::to_string(i + 1) + "] " + text::collapse_whitespace(context[i].text);
    answer.provenance.push_back(context[i].paragraph);
  }
  llm::GatewayRequest request;
  request.system = templates.get(llm::templates::kSystem);
  request.user = llm::render(templates.get(llm::templates::kAnswer), {{"question", q}, {"context", rendered}});
  auto reply = gateway.complete(request);
  answer.text = std::move(reply.text);
  answer.backend = std::move(reply.backend);
  return answer;
}

}  // namespace askg::kgqp
