#include "askg/rdf/pattern.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace askg::rdf {
namespace {

constexpr TermId kUnbound = std::numeric_limits<TermId>::max();

struct Slot {
  enum class Kind { kAny, kVar, kFixed } kind = Kind::kAny;
  std::size_t var = 0;
  std::vector<TermId> ids;  // sorted, for kFixed
};

struct CompiledPattern {
  Slot slots[3];
};

class Matcher {
 public:
  Matcher(const KnowledgeGraph& graph, const CompoundQuery& query) : graph_(graph) {
    for (const auto& p : query.patterns) {
      CompiledPattern cp;
      cp.slots[0] = compile(p.subject);
      cp.slots[1] = compile(p.predicate);
      cp.slots[2] = compile(p.object);
      patterns_.push_back(std::move(cp));
    }
  }

  MatchResult run() {
    MatchResult result;
    for (const auto& p : patterns_) {
      for (const auto& s : p.slots) {
        if (s.kind == Slot::Kind::kFixed && s.ids.empty()) return result;
      }
    }
    std::vector<TermId> binding(var_names_.size(), kUnbound);
    std::vector<bool> done(patterns_.size(), false);
    std::set<std::vector<TermId>> found;
    search(binding, done, patterns_.size(), found);

    std::set<std::uint32_t> witness;
    for (const auto& sol : found) {
      Binding b;
      for (std::size_t v = 0; v < var_names_.size(); ++v) b.emplace(var_names_[v], graph_.term(sol[v]));
      result.solutions.push_back(std::move(b));
      for (const auto& p : patterns_) {
        for (auto pos : candidates(p, sol)) {
          std::vector<TermId> scratch = sol;
          if (accepts(p, graph_.id_triples()[pos], scratch)) witness.insert(pos);
        }
      }
    }
    std::sort(result.solutions.begin(), result.solutions.end());
    for (auto pos : witness) result.triples.push_back(graph_.triples()[pos]);
    return result;
  }

  const std::vector<std::string>& var_names() const { return var_names_; }
  const std::vector<CompiledPattern>& patterns() const { return patterns_; }

  std::vector<std::uint32_t> candidates(const CompiledPattern& p,
                                        const std::vector<TermId>& binding) const {
    // Pick the smallest index list among the constrained positions.
    std::vector<std::uint32_t> best;
    bool have_best = false;
    for (int k = 0; k < 3; ++k) {
      std::vector<TermId> ids;
      const Slot& s = p.slots[k];
      if (s.kind == Slot::Kind::kFixed) {
        ids = s.ids;
      } else if (s.kind == Slot::Kind::kVar && binding[s.var] != kUnbound) {
        ids = {binding[s.var]};
      } else {
        continue;
      }
      std::vector<std::uint32_t> positions;
      for (auto id : ids) {
        const auto span = k == 0 ? graph_.with_subject(id)
                          : k == 1 ? graph_.with_predicate(id)
                                   : graph_.with_object(id);
        positions.insert(positions.end(), span.begin(), span.end());
      }
      if (!have_best || positions.size() < best.size()) {
        best = std::move(positions);
        have_best = true;
      }
    }
    if (!have_best) {
      best.resize(graph_.size());
      for (std::uint32_t i = 0; i < best.size(); ++i) best[i] = i;
    }
    return best;
  }

  /// Checks `t` against `p`, extending `binding` with newly bound variables.
  static bool accepts(const CompiledPattern& p, const IdTriple& t, std::vector<TermId>& binding) {
    const TermId values[3] = {t.subject, t.predicate, t.object};
    for (int k = 0; k < 3; ++k) {
      const Slot& s = p.slots[k];
      switch (s.kind) {
        case Slot::Kind::kAny: break;
        case Slot::Kind::kFixed:
          if (!std::binary_search(s.ids.begin(), s.ids.end(), values[k])) return false;
          break;
        case Slot::Kind::kVar:
          if (binding[s.var] == kUnbound) {
            binding[s.var] = values[k];
          } else if (binding[s.var] != values[k]) {
            return false;
          }
          break;
      }
    }
    return true;
  }

 private:
  Slot compile(const PatternTerm& term) {
    Slot slot;
    if (std::holds_alternative<Wildcard>(term)) return slot;
    if (const auto* v = std::get_if<Variable>(&term)) {
      slot.kind = Slot::Kind::kVar;
      const auto it = std::find(var_names_.begin(), var_names_.end(), v->name);
      slot.var = static_cast<std::size_t>(it - var_names_.begin());
      if (it == var_names_.end()) var_names_.push_back(v->name);
      return slot;
    }
    slot.kind = Slot::Kind::kFixed;
    auto add = [&](const Term& t) {
      if (auto id = graph_.id_of(t)) slot.ids.push_back(*id);
    };
    if (const auto* t = std::get_if<Term>(&term)) {
      add(*t);
    } else {
      for (const auto& t : std::get<OneOf>(term).terms) add(t);
    }
    std::sort(slot.ids.begin(), slot.ids.end());
    slot.ids.erase(std::unique(slot.ids.begin(), slot.ids.end()), slot.ids.end());
    return slot;
  }

  // Backtracking join. Candidates that differ only in wildcard positions
  // lead to the same extension, so each distinct extension is explored once.
  void search(std::vector<TermId>& binding, std::vector<bool>& done, std::size_t remaining,
              std::set<std::vector<TermId>>& found) {
    if (remaining == 0) {
      found.insert(binding);
      return;
    }
    std::size_t chosen = patterns_.size();
    std::vector<std::uint32_t> chosen_candidates;
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
      if (done[i]) continue;
      auto c = candidates(patterns_[i], binding);
      if (chosen == patterns_.size() || c.size() < chosen_candidates.size()) {
        chosen = i;
        chosen_candidates = std::move(c);
      }
    }

    std::set<std::vector<TermId>> extensions;
    for (auto pos : chosen_candidates) {
      std::vector<TermId> next = binding;
      if (accepts(patterns_[chosen], graph_.id_triples()[pos], next)) extensions.insert(std::move(next));
    }
    done[chosen] = true;
    for (auto ext : extensions) search(ext, done, remaining - 1, found);
    done[chosen] = false;
  }

  const KnowledgeGraph& graph_;
  std::vector<CompiledPattern> patterns_;
  std::vector<std::string> var_names_;
};

}  // namespace

MatchResult match_compound(const KnowledgeGraph& graph, const CompoundQuery& query) {
  if (query.patterns.empty()) return {};
  return Matcher(graph, query).run();
}

std::vector<Triple> match_pattern(const KnowledgeGraph& graph, const TriplePattern& pattern,
                                  const Binding& binding) {
  TriplePattern bound = pattern;
  auto substitute = [&](PatternTerm& t) {
    if (const auto* v = std::get_if<Variable>(&t)) {
      const auto it = binding.find(v->name);
      if (it != binding.end()) t = it->second;
    }
  };
  substitute(bound.subject);
  substitute(bound.predicate);
  substitute(bound.object);
  return match_compound(graph, CompoundQuery{{bound}}).triples;
}

}  // namespace askg::rdf
