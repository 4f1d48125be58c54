// Brute-force reference implementations (stable models by 2^n sweep, minimal
// classical models, randomized-order remainder) plus a reproducible random
// program generator and the property checks used by the fuzz sweep.
#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>

#include "mh/reduction.hpp"
#include "mh/semantics.hpp"
#include "mh/syntax.hpp"

namespace mh {

struct GeneratorParams {
  int atom_count = 6;
  int rule_count = 10;
  int max_body = 3;
  double negative_probability = 0.5;
  std::uint64_t seed = 0;
};

namespace detail {

inline std::vector<Atom> sorted_base(const GroundProgram& p) {
  return {p.herbrand_base.begin(), p.herbrand_base.end()};
}

inline Interpretation nth_interpretation(const std::vector<Atom>& base, std::uint64_t bits) {
  Interpretation i;
  i.base.insert(base.begin(), base.end());
  for (size_t k = 0; k < base.size(); ++k)
    if (bits & (std::uint64_t{1} << k)) i.true_atoms.insert(base[k]);
  return i;
}

// Classical satisfaction: head true whenever body true; a denial's body must
// be false.
inline bool is_classical_model(const GroundProgram& p, const Interpretation& i) {
  for (const auto& r : p.rules) {
    if (!i.satisfies_all(r.body)) continue;
    if (!r.head || !i.is_true(*r.head)) return false;
  }
  return true;
}

}  // namespace detail

// All stable models by exhaustive sweep of total interpretations.
inline std::vector<Interpretation> all_stable_models_bruteforce(const GroundProgram& p) {
  auto base = detail::sorted_base(p);
  if (base.size() > 20) throw std::invalid_argument("herbrand base too large for brute force");
  std::vector<Interpretation> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << base.size()); ++bits) {
    Interpretation m = detail::nth_interpretation(base, bits);
    if (is_stable_model(p, m)) out.push_back(std::move(m));
  }
  return out;
}

// True-atom sets of the ⊆-minimal classical models.
inline std::vector<std::set<Atom>> all_minimal_models(const GroundProgram& p) {
  auto base = detail::sorted_base(p);
  if (base.size() > 20) throw std::invalid_argument("herbrand base too large for brute force");
  std::vector<std::set<Atom>> models;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << base.size()); ++bits) {
    Interpretation m = detail::nth_interpretation(base, bits);
    if (detail::is_classical_model(p, m)) models.push_back(std::move(m.true_atoms));
  }
  std::vector<std::set<Atom>> minimal;
  for (const auto& m : models) {
    bool dominated = std::any_of(models.begin(), models.end(), [&](const auto& other) {
      return other != m && std::includes(m.begin(), m.end(), other.begin(), other.end());
    });
    if (!dominated) minimal.push_back(m);
  }
  return minimal;
}

// Remainder with applicable step instances picked uniformly at random; must
// coincide with the deterministic remainder (the system is confluent).
inline GroundProgram randomized_remainder(const GroundProgram& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GroundProgram cur = p;
  while (true) {
    // candidate actions: one per applicable (rule, literal) instance, plus
    // one for loop detection
    std::vector<std::function<GroundProgram()>> actions;
    auto heads = cur.heads();
    auto facts = cur.facts();
    for (size_t i = 0; i < cur.rules.size(); ++i) {
      for (const auto& l : cur.rules[i].body) {
        if (l.negated && !heads.count(l.atom))
          actions.push_back([&cur, i, l] { return detail::drop_literal(cur, i, l); });
        if (l.negated && facts.count(l.atom))
          actions.push_back([&cur, i] { return detail::drop_rules(cur, {cur.rules[i].id}); });
        if (!l.negated && facts.count(l.atom))
          actions.push_back([&cur, i, l] { return detail::drop_literal(cur, i, l); });
        if (!l.negated && !heads.count(l.atom))
          actions.push_back([&cur, i] { return detail::drop_rules(cur, {cur.rules[i].id}); });
      }
    }
    StepResult loop = step_loop_detection(cur);
    if (loop) actions.push_back([&loop] { return loop->first; });
    if (actions.empty()) break;
    size_t pick = std::uniform_int_distribution<size_t>(0, actions.size() - 1)(rng);
    cur = actions[pick]();
  }
  return cur;
}

// Reproducible propositional program: rule_count distinct rules over
// atom_count atoms, bodies up to max_body literals, each negated with the
// given probability.
inline GroundProgram random_program(const GeneratorParams& params) {
  std::mt19937_64 rng(params.seed);
  auto atom_name = [](int i) {
    std::string s(1, static_cast<char>('a' + i % 26));
    if (i >= 26) s += std::to_string(i / 26);
    return s;
  };
  std::uniform_int_distribution<int> atom_dist(0, params.atom_count - 1);
  std::uniform_int_distribution<int> body_dist(0, params.max_body);
  std::bernoulli_distribution neg_dist(params.negative_probability);

  std::vector<Rule> rules;
  int attempts = 0;
  while (static_cast<int>(rules.size()) < params.rule_count && attempts++ < params.rule_count * 50) {
    Rule r;
    r.head = Atom{atom_name(atom_dist(rng)), {}};
    int body_size = body_dist(rng);
    for (int j = 0; j < body_size; ++j)
      r.body.push_back(Literal{Atom{atom_name(atom_dist(rng)), {}}, neg_dist(rng)});
    r.normalize_body();
    bool dup = std::any_of(rules.begin(), rules.end(),
                           [&](const Rule& o) { return same_shape(o, r); });
    if (!dup) rules.push_back(std::move(r));
  }

  std::sort(rules.begin(), rules.end(), rule_less);
  GroundProgram g;
  for (size_t i = 0; i < rules.size(); ++i) {
    rules[i].id = static_cast<int>(i);
    if (rules[i].head) g.herbrand_base.insert(*rules[i].head);
    for (const auto& l : rules[i].body) g.herbrand_base.insert(l.atom);
  }
  g.rules = std::move(rules);
  return g;
}

// ---------------------------------------------------------------------------
// Property checks. Each returns a failure description, or nothing on success.

namespace props {

inline std::string atoms_to_string(const std::set<Atom>& s) {
  std::string out = "{";
  for (const auto& a : s) {
    if (out.size() > 1) out += " ";
    out += a.to_string();
  }
  return out + "}";
}

inline std::optional<std::string> check_confluence(const GroundProgram& p, int orders,
                                                   std::uint64_t seed) {
  GroundProgram expected = remainder(p).first;
  for (int i = 0; i < orders; ++i)
    if (!same_rules(randomized_remainder(p, seed + i), expected))
      return "confluence: randomized order " + std::to_string(i) +
             " disagrees with the deterministic remainder";
  return std::nullopt;
}

// Model existence plus soundness of every returned model: each must be a
// classical model of the rules, and every non-empty witness must be
// strictly minimal. (True atoms need not be supported by the program's own
// rules: a hypothesized atom is supported by the hypothesis fact itself.)
inline std::optional<std::string> check_existence(const GroundProgram& p) {
  auto result = mh_models(p);
  if (result.models.empty()) return "existence: no MH model";
  GroundProgram core = strip_denials(p);
  for (const auto& m : result.models) {
    if (!detail::is_classical_model(core, m.model))
      return "soundness: " + atoms_to_string(m.model.true_atoms) + " is not a classical model";
    for (const auto& w : m.witnesses) {
      if (w.empty()) continue;
      for (const auto& drop : w) {
        std::set<Atom> sub = w;
        sub.erase(drop);
        if (!sub.empty() && determines(core, sub))
          return "minimality: witness " + atoms_to_string(w) + " has determining strict subset " +
                 atoms_to_string(sub);
      }
    }
  }
  return std::nullopt;
}

// Oracle SMs coincide with the stable-classified MH models; in particular
// every stable model appears among the MH models.
inline std::optional<std::string> check_sm_subset(const GroundProgram& p) {
  auto mh = mh_models(p);
  std::set<std::set<Atom>> mh_sets, mh_stable;
  for (const auto& m : mh.models) {
    mh_sets.insert(m.model.true_atoms);
    if (is_stable_model(p, m.model)) mh_stable.insert(m.model.true_atoms);
  }
  std::set<std::set<Atom>> sm_sets;
  for (const auto& m : all_stable_models_bruteforce(p)) sm_sets.insert(m.true_atoms);
  for (const auto& sm : sm_sets)
    if (!mh_sets.count(sm))
      return "sm-subset: stable model " + atoms_to_string(sm) + " missing from MH models";
  if (mh_stable != sm_sets) return "sm-subset: stable-classified MH models differ from oracle SMs";
  return std::nullopt;
}

inline std::optional<std::string> check_wfm_compliance(const GroundProgram& p) {
  ThreeValuedModel wfm = well_founded_model(strip_denials(p));
  std::set<Atom> upper = wfm.true_atoms;
  upper.insert(wfm.undefined_atoms.begin(), wfm.undefined_atoms.end());
  for (const auto& m : mh_models(p).models) {
    const auto& t = m.model.true_atoms;
    bool lower_ok = std::includes(t.begin(), t.end(), wfm.true_atoms.begin(), wfm.true_atoms.end());
    bool upper_ok = std::includes(upper.begin(), upper.end(), t.begin(), t.end());
    if (lower_ok && upper_ok) return std::nullopt;
  }
  return "wfm: no MH model lies within [WFM+, WFM+u]";
}

inline std::optional<std::string> check_support_implication(const GroundProgram& p,
                                                            std::uint64_t seed, int samples = 16) {
  auto base = detail::sorted_base(p);
  if (base.empty()) return std::nullopt;
  RuleGraph g(p);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, (std::uint64_t{1} << base.size()) - 1);
  for (int s = 0; s < samples; ++s) {
    Interpretation i = detail::nth_interpretation(base, dist(rng));
    for (const auto& a : base) {
      auto st = support_status(p, g, i, a);
      if (st.classical && !st.layered)
        return "support: classical but not layered support for " + a.to_string() + " under " +
               atoms_to_string(i.true_atoms);
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> check_cumulativity(const GroundProgram& p) {
  auto result = mh_models(p);
  if (result.models.empty()) return "cumulativity: no MH model";
  std::set<Atom> common = result.models.front().model.true_atoms;
  for (const auto& m : result.models) {
    std::set<Atom> inter;
    std::set_intersection(common.begin(), common.end(), m.model.true_atoms.begin(),
                          m.model.true_atoms.end(), std::inserter(inter, inter.begin()));
    common = std::move(inter);
  }
  // Cumulativity concerns cautious consequences: once a is true in every
  // model, adding it as a fact must not change which atoms are true in every
  // model. The model families themselves may differ (a hypothesis that was
  // shadowed by a strictly smaller witness in P can become minimal in
  // P u {a}), so comparing families atom-by-atom is the right test.
  for (const auto& a : common) {
    auto result_a = mh_models(add_facts(p, {a}));
    if (result_a.models.empty())
      return "cumulativity: adding universally-true fact " + a.to_string() + " lost all models";
    std::set<Atom> common_a = result_a.models.front().model.true_atoms;
    for (const auto& m : result_a.models) {
      std::set<Atom> inter;
      std::set_intersection(common_a.begin(), common_a.end(), m.model.true_atoms.begin(),
                            m.model.true_atoms.end(), std::inserter(inter, inter.begin()));
      common_a = std::move(inter);
    }
    if (common_a != common)
      return "cumulativity: adding universally-true fact " + a.to_string() +
             " changed the cautious consequences";
  }
  return std::nullopt;
}

inline std::optional<std::string> check_relevance(const GroundProgram& p) {
  std::map<std::set<Atom>, bool> seen;
  auto result = mh_models(p);
  for (const auto& a : p.herbrand_base) {
    bool whole = std::all_of(result.models.begin(), result.models.end(),
                             [&](const MHModel& m) { return m.model.is_true(a); });
    auto rel = mh_models(relevant_part(p, a));
    bool local = std::all_of(rel.models.begin(), rel.models.end(),
                             [&](const MHModel& m) { return m.model.is_true(a); });
    if (whole != local)
      return "relevance: cautious truth of " + a.to_string() + " differs on the relevant part (" +
             (whole ? "true" : "false") + " on P, " + (local ? "true" : "false") + " on Rel)";
  }
  return std::nullopt;
}

}  // namespace props

struct SweepConfig {
  int programs = 1000;
  int atoms = 8;
  int max_rules = 12;
  int max_body = 3;
  double negative_probability = 0.5;
  std::uint64_t seed = 20240915;
  int confluence_orders = 50;
  std::string property = "all";  // all|confluence|sm-subset|existence|wfm|cumulativity|relevance
};

struct SweepFailure {
  std::string message;
  GroundProgram program;
};

// Runs the selected property over random denial-free programs; stops at the
// first counterexample.
inline std::optional<SweepFailure> run_sweep(const SweepConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> rule_dist(1, cfg.max_rules);
  for (int i = 0; i < cfg.programs; ++i) {
    GeneratorParams params;
    params.atom_count = cfg.atoms;
    params.rule_count = rule_dist(rng);
    params.max_body = cfg.max_body;
    params.negative_probability = cfg.negative_probability;
    params.seed = rng();
    GroundProgram p = random_program(params);
    std::uint64_t prop_seed = rng();

    auto run = [&](const std::string& name) -> std::optional<std::string> {
      if (name == "confluence") return props::check_confluence(p, cfg.confluence_orders, prop_seed);
      if (name == "existence") return props::check_existence(p);
      if (name == "sm-subset") return props::check_sm_subset(p);
      if (name == "wfm") return props::check_wfm_compliance(p);
      if (name == "support") return props::check_support_implication(p, prop_seed);
      if (name == "cumulativity") return props::check_cumulativity(p);
      if (name == "relevance") return props::check_relevance(p);
      throw std::invalid_argument("unknown property: " + name);
    };

    std::vector<std::string> to_run;
    if (cfg.property == "all")
      to_run = {"confluence", "existence", "sm-subset", "wfm", "support", "cumulativity",
                "relevance"};
    else
      to_run = {cfg.property};
    for (const auto& name : to_run)
      if (auto failure = run(name))
        return SweepFailure{"program " + std::to_string(i) + ": " + *failure, p};
  }
  return std::nullopt;
}

}  // namespace mh
