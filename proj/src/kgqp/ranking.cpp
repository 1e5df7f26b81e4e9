#include "askg/kgqp/ranking.hpp"

#include <algorithm>
#include <map>

namespace askg::kgqp {

namespace {

std::string object_key(const rdf::Triple& t) {
  const auto* o = rdf::as_iri(t.object);
  return o == nullptr ? std::string{} : rdf::node_key(o->value);
}

}  // namespace

std::size_t frequency(const std::string& entity, const CandidateTripleSet& ctkg) {
  return static_cast<std::size_t>(std::count_if(ctkg.triples.begin(), ctkg.triples.end(), [&](const rdf::Triple& t) {
    return rdf::node_key(t.subject.value) == entity || (rdf::is_iri(t.object) && object_key(t) == entity);
  }));
}

double purity(const std::string& entity, const CandidateTripleSet& ctkg,
              const std::set<std::string>& query_entities) {
  std::set<std::string> co;
  for (const auto& t : ctkg.triples) {
    const std::string s = rdf::node_key(t.subject.value);
    const bool has_object = rdf::is_iri(t.object);
    const std::string o = has_object ? object_key(t) : std::string{};
    if (s == entity && has_object && o != entity) co.insert(o);
    if (has_object && o == entity && s != entity) co.insert(s);
  }
  if (co.empty()) return 0.0;
  const auto relevant = std::count_if(co.begin(), co.end(),
                                      [&](const std::string& k) { return query_entities.contains(k); });
  return static_cast<double>(relevant) / static_cast<double>(co.size());
}

std::vector<RankedEntity> rank_candidates(const CandidateTripleSet& ctkg,
                                          const std::set<std::string>& query_entities) {
  std::map<std::string, rdf::Iri> entities;
  auto note = [&](const rdf::Iri& iri) {
    auto [it, fresh] = entities.emplace(rdf::node_key(iri.value), iri);
    if (!fresh && iri < it->second) it->second = iri;
  };
  for (const auto& t : ctkg.triples) {
    note(t.subject);
    if (const auto* o = rdf::as_iri(t.object)) note(*o);
  }

  std::vector<RankedEntity> out;
  for (const auto& [key, iri] : entities) {
    RankedEntity r{key, iri, frequency(key, ctkg), purity(key, ctkg, query_entities), 0.0};
    r.score = static_cast<double>(r.frequency) * r.purity;
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [](const RankedEntity& a, const RankedEntity& b) {
    if (a.score != b.score) return a.score > b.score;
    if (a.frequency != b.frequency) return a.frequency > b.frequency;
    return a.key < b.key;
  });
  return out;
}

}  // namespace askg::kgqp
