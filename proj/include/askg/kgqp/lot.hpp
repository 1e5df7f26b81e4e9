#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "askg/error.hpp"
#include "askg/kgqp/query.hpp"
#include "askg/llm/gateway.hpp"
#include "askg/llm/prompts.hpp"

namespace askg::kgqp {

/// The backend's reply could not be read as triples.
class UnparseableResponse : public ProtocolError {
 public:
  UnparseableResponse(const std::string& message, std::string raw)
      : ProtocolError(message + "; raw response: " + raw), raw_(std::move(raw)) {}
  const std::string& raw() const noexcept { return raw_; }

 private:
  std::string raw_;
};

struct LotExtraction {
  CompoundQuery query;                 // ground terms as entity keys
  std::vector<TriplePattern> surface;  // ground terms as the backend wrote them
  std::string raw_response;
};

/// Asks the gateway to restate `question` as triples (the extraction
/// template) and parses the reply.
///
/// Throws PreconditionError for an empty question and UnparseableResponse
/// when the reply holds no well-formed triple line.
LotExtraction extract_lot_detailed(std::string_view question, const llm::Gateway& gateway,
                                   const llm::TemplateSet& templates = llm::TemplateSet::defaults());

CompoundQuery extract_lot(std::string_view question, const llm::Gateway& gateway,
                          const llm::TemplateSet& templates = llm::TemplateSet::defaults());

}  // namespace askg::kgqp
