#include "askg/kgqp/lot.hpp"

#include "askg/llm/triples_format.hpp"
#include "askg/text.hpp"

namespace askg::kgqp {

LotExtraction extract_lot_detailed(std::string_view question, const llm::Gateway& gateway,
                                   const llm::TemplateSet& templates) {
  const std::string q = text::collapse_whitespace(question);
  if (q.empty()) throw PreconditionError("question is empty");

  llm::GatewayRequest request;
  request.system = templates.get(llm::templates::kSystem);
  request.user = llm::render(templates.get(llm::templates::kExtractTriples), {{"question", q}});
  auto response = gateway.complete(request);

  LotExtraction out;
  out.raw_response = std::move(response.text);
  try {
    out.surface = llm::parse_triples_response(out.raw_response);
  } catch (const ParseError& e) {
    throw UnparseableResponse(std::string("cannot read triples: ") + e.what(), out.raw_response);
  }
  if (out.surface.empty()) throw UnparseableResponse("response holds no triples", out.raw_response);
  for (const auto& p : out.surface) {
    auto n = normalize(p);
    if (!n.has_ground_term() || (n.subject.is_ground() && n.subject.value.empty()) ||
        (n.predicate.is_ground() && n.predicate.value.empty()) ||
        (n.object.is_ground() && n.object.value.empty())) {
      throw UnparseableResponse("triple " + to_string(p) + " has no usable ground term",
                                out.raw_response);
    }
    out.query.patterns.push_back(std::move(n));
  }
  return out;
}

CompoundQuery extract_lot(std::string_view question, const llm::Gateway& gateway,
                          const llm::TemplateSet& templates) {
  return extract_lot_detailed(question, gateway, templates).query;
}

}  // namespace askg::kgqp
