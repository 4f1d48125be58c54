// Minimal-hypotheses semantics: hypotheses sets from the layered remainder,
// the determines() check through the remainder, exhaustive enumeration of MH
// models, Gelfond-Lifschitz reduct and stable-model classification, denial
// filtering and brave/cautious query answering.
#pragma once

#include <cstdint>

#include "mh/depgraph.hpp"
#include "mh/reduction.hpp"
#include "mh/syntax.hpp"

namespace mh {

// Keeps only headed rules. The frozen base is preserved.
inline GroundProgram strip_denials(const GroundProgram& p) {
  GroundProgram out;
  out.herbrand_base = p.herbrand_base;
  for (const auto& r : p.rules)
    if (!r.is_denial()) out.rules.push_back(r);
  return out;
}

inline std::vector<Rule> denials_of(const GroundProgram& p) {
  std::vector<Rule> out;
  for (const auto& r : p.rules)
    if (r.is_denial()) out.push_back(r);
  return out;
}

namespace detail {

inline std::set<Atom> negated_body_atoms(const GroundProgram& p) {
  std::set<Atom> out;
  for (const auto& r : p.rules)
    for (const auto& l : r.body)
      if (l.negated) out.insert(l.atom);
  return out;
}

}  // namespace detail

// Hyps(P): atoms appearing default-negated in the layered remainder of the
// denial-free part.
inline std::set<Atom> hypotheses_set(const GroundProgram& p) {
  return detail::negated_body_atoms(layered_remainder(strip_denials(p)).first);
}

// CHyps(P): same over the remainder; always a subset of Hyps(P).
inline std::set<Atom> classical_hypotheses_set(const GroundProgram& p) {
  return detail::negated_body_atoms(remainder(strip_denials(p)).first);
}

// P with the atoms of h added as facts (set semantics: existing facts are not
// duplicated). New fact rules get fresh ids.
inline GroundProgram add_facts(const GroundProgram& p, const std::set<Atom>& h) {
  GroundProgram out = p;
  int next_id = 0;
  for (const auto& r : p.rules) next_id = std::max(next_id, r.id + 1);
  auto facts = p.facts();
  for (const auto& a : h) {
    if (facts.count(a)) continue;
    out.rules.push_back(Rule{a, {}, next_id++});
    out.herbrand_base.insert(a);
  }
  return out;
}

// Remainder of P ∪ H; when its facts and heads coincide every literal is
// determined and the total model with those true atoms is returned.
inline std::optional<Interpretation> determines(const GroundProgram& p, const std::set<Atom>& h) {
  GroundProgram joined = add_facts(p, h);
  GroundProgram rem = remainder(joined).first;
  auto facts = rem.facts();
  if (facts != rem.heads()) return std::nullopt;
  return Interpretation{joined.herbrand_base, std::move(facts)};
}

struct MHModel {
  Interpretation model;
  std::vector<std::set<Atom>> witnesses;  // each empty or non-empty ⊆-minimal
};

struct MHResult {
  std::vector<MHModel> models;  // sorted by true-atom set; deduplicated
  bool complete = true;         // false when the subset limit was hit
};

// Enumerates subsets of Hyps(P) by increasing cardinality, skipping strict
// supersets of already-successful non-empty witnesses; this yields exactly
// the set-inclusion minimal hypothesis sets without assuming that enlarging a
// successful set stays successful. The H = ∅ candidate is tried first and
// reported alongside. Denials are ignored here; filter afterwards.
inline MHResult mh_models(const GroundProgram& p,
                          std::optional<std::uint64_t> limit = std::nullopt) {
  GroundProgram core = strip_denials(p);
  std::vector<Atom> hyps;
  for (const auto& a : hypotheses_set(core)) hyps.push_back(a);
  const size_t n = hyps.size();

  std::map<std::set<Atom>, std::vector<std::set<Atom>>> by_model;  // true set -> witnesses
  std::vector<std::set<Atom>> successes;                           // non-empty minimal witnesses
  std::uint64_t explored = 0;
  bool complete = true;

  if (auto m = determines(core, {})) by_model[m->true_atoms].push_back({});

  auto next_combination = [n](std::vector<size_t>& c) {
    const size_t k = c.size();
    for (size_t i = k; i-- > 0;) {
      if (c[i] < n - k + i) {
        ++c[i];
        for (size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        return true;
      }
    }
    return false;
  };

  for (size_t k = 1; k <= n && complete; ++k) {
    std::vector<size_t> pick(k);
    for (size_t i = 0; i < k; ++i) pick[i] = i;
    do {
      std::set<Atom> h;
      for (size_t i : pick) h.insert(hyps[i]);
      bool superset = std::any_of(successes.begin(), successes.end(), [&](const auto& w) {
        return std::includes(h.begin(), h.end(), w.begin(), w.end());
      });
      if (superset) continue;
      if (limit && ++explored > *limit) { complete = false; break; }
      if (auto m = determines(core, h)) {
        by_model[m->true_atoms].push_back(h);
        successes.push_back(std::move(h));
      }
    } while (next_combination(pick));
  }

  MHResult out;
  out.complete = complete;
  for (auto& [true_atoms, witnesses] : by_model)
    out.models.push_back(MHModel{Interpretation{core.herbrand_base, true_atoms}, witnesses});
  return out;
}

// Gelfond-Lifschitz reduct: drop rules whose negative body is contradicted by
// m, strip negative literals from the rest. Denials are dropped.
inline GroundProgram gl_reduct(const GroundProgram& p, const Interpretation& m) {
  GroundProgram out;
  out.herbrand_base = p.herbrand_base;
  for (const auto& r : p.rules) {
    if (r.is_denial()) continue;
    bool blocked = std::any_of(r.body.begin(), r.body.end(), [&](const Literal& l) {
      return l.negated && m.is_true(l.atom);
    });
    if (blocked) continue;
    Rule definite;
    definite.head = r.head;
    definite.id = r.id;
    for (const auto& l : r.body)
      if (!l.negated) definite.body.push_back(l);
    out.rules.push_back(std::move(definite));
  }
  return out;
}

// Least fixpoint of the immediate-consequence closure of a definite program.
inline std::set<Atom> least_model(const GroundProgram& p) {
  for (const auto& r : p.rules)
    for (const auto& l : r.body)
      if (l.negated) throw std::invalid_argument("least_model requires a definite program");
  std::set<Atom> m;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : p.rules) {
      if (!r.head || m.count(*r.head)) continue;
      bool fire = std::all_of(r.body.begin(), r.body.end(),
                              [&](const Literal& l) { return m.count(l.atom) > 0; });
      if (fire) {
        m.insert(*r.head);
        changed = true;
      }
    }
  }
  return m;
}

inline bool is_stable_model(const GroundProgram& p, const Interpretation& m) {
  return least_model(gl_reduct(p, m)) == m.true_atoms;
}

// Keep the models under which no denial body is satisfied.
inline std::vector<MHModel> filter_denials(const std::vector<MHModel>& models,
                                           const std::vector<Rule>& denials) {
  std::vector<MHModel> out;
  for (const auto& m : models) {
    bool violated = std::any_of(denials.begin(), denials.end(), [&](const Rule& d) {
      return m.model.satisfies_all(d.body);
    });
    if (!violated) out.push_back(m);
  }
  return out;
}

struct QueryAnswer {
  bool holds = false;
  std::optional<MHModel> witness;  // brave: a satisfying model; cautious: a counter-model
};

namespace detail {

inline void check_query(const GroundProgram& p, const std::vector<Literal>& q) {
  std::set<Atom> pos, neg;
  for (const auto& l : q) (l.negated ? neg : pos).insert(l.atom);
  for (const auto& a : pos)
    if (neg.count(a)) throw std::invalid_argument("inconsistent query: " + a.to_string());
  for (const auto& l : q)
    if (!p.herbrand_base.count(l.atom))
      throw std::invalid_argument("query atom not in herbrand base: " + l.atom.to_string());
}

inline bool single_positive_atom(const std::vector<Literal>& q) {
  return q.size() == 1 && !q[0].negated;
}

inline MHResult query_models(const GroundProgram& p, const std::vector<Literal>& q,
                             bool use_relevance) {
  if (use_relevance && single_positive_atom(q))
    return mh_models(relevant_part(strip_denials(p), q[0].atom));
  return mh_models(p);
}

}  // namespace detail

// Holds iff some MH model satisfies every query literal.
inline QueryAnswer brave_query(const GroundProgram& p, const std::vector<Literal>& q,
                               bool use_relevance = false) {
  detail::check_query(p, q);
  for (const auto& m : detail::query_models(p, q, use_relevance).models)
    if (m.model.satisfies_all(q)) return {true, m};
  return {false, std::nullopt};
}

// Holds iff every MH model satisfies every query literal; a failing model is
// returned as counter-witness.
inline QueryAnswer cautious_query(const GroundProgram& p, const std::vector<Literal>& q,
                                  bool use_relevance = false) {
  detail::check_query(p, q);
  for (const auto& m : detail::query_models(p, q, use_relevance).models)
    if (!m.model.satisfies_all(q)) return {false, m};
  return {true, std::nullopt};
}

}  // namespace mh
