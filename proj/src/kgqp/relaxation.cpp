#include "askg/kgqp/relaxation.hpp"

#include <algorithm>
#include <set>

#include "askg/error.hpp"

namespace askg::kgqp {

RelaxationDictionary::RelaxationDictionary(std::vector<TriplePattern> patterns)
    : entries(std::move(patterns)) {
  for (const auto& p : entries) {
    if (!p.has_ground_term()) {
      throw PreconditionError("dictionary pattern " + to_string(p) + " has no ground term");
    }
  }
  std::sort(entries.begin(), entries.end());
  entries.erase(std::unique(entries.begin(), entries.end()), entries.end());
}

RelaxationDictionary RelaxationDictionary::merged(const RelaxationDictionary& other) const {
  auto all = entries;
  all.insert(all.end(), other.entries.begin(), other.entries.end());
  return RelaxationDictionary(std::move(all));
}

CompoundQuery relax(const CompoundQuery& query, std::size_t i,
                    const std::optional<TriplePattern>& replacement) {
  const std::size_t n = query.size();
  if (i < 1 || i > n) {
    throw PreconditionError("relax position " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
  CompoundQuery out = query;
  if (replacement) {
    if (!replacement->has_ground_term()) {
      throw PreconditionError("replacement " + to_string(*replacement) + " has no ground term");
    }
    out.patterns[i - 1] = *replacement;
  } else {
    if (n < 2) throw PreconditionError("cannot relax below one triple");
    out.patterns.erase(out.patterns.begin() + static_cast<std::ptrdiff_t>(i - 1));
  }
  return out;
}

std::vector<RelaxedQuery> relax_set(const RelaxedQuery& base, const RelaxationDictionary& dict) {
  std::vector<RelaxedQuery> out;
  std::set<std::vector<TriplePattern>> seen;
  auto add = [&](CompoundQuery q, Edit edit) {
    if (!seen.insert(q.patterns).second) return;
    RelaxedQuery r{std::move(q), base.depth + 1, base.edits};
    r.edits.push_back(std::move(edit));
    out.push_back(std::move(r));
  };

  const auto& q = base.query;
  const std::size_t n = q.size();
  if (n >= 2) {
    for (std::size_t i = 1; i <= n; ++i) add(relax(q, i, std::nullopt), {Edit::Kind::kDelete, i, {}});
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (const auto& d : dict.entries) {
      if (d == q.patterns[i - 1]) continue;
      add(relax(q, i, d), {Edit::Kind::kReplace, i, d});
    }
  }
  return out;
}

std::vector<RelaxedQuery> relax_set(const CompoundQuery& query, const RelaxationDictionary& dict) {
  return relax_set(RelaxedQuery{query, 0, {}}, dict);
}

RelaxationDictionary default_dictionary(const CompoundQuery& query) {
  std::vector<TriplePattern> variants;
  for (const auto& p : query.patterns) {
    for (QueryTerm TriplePattern::*slot :
         {&TriplePattern::subject, &TriplePattern::predicate, &TriplePattern::object}) {
      if (!(p.*slot).is_ground()) continue;
      TriplePattern v = p;
      v.*slot = QueryTerm::wildcard();
      if (v.has_ground_term()) variants.push_back(std::move(v));
    }
  }
  return RelaxationDictionary(std::move(variants));
}

}  // namespace askg::kgqp
