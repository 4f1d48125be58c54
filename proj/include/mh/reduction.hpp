// The rewriting systems behind the remainder and the layered remainder:
// positive reduction (P), negative reduction (N), layered negative reduction
// (LN), success (S), failure (F) and loop detection (L), plus well-founded
// model extraction from the remainder fixpoint.
//
// Step functions are pure: they return the rewritten program and a step
// record, or nothing when the step is not applicable. Applicable instances
// are chosen deterministically (lowest rule id, then lowest body literal);
// the fixpoint is order-independent regardless, which the oracle module's
// randomized runs verify.
#pragma once

#include <cassert>
#include <utility>

#include "mh/depgraph.hpp"
#include "mh/syntax.hpp"

namespace mh {

enum class StepKind {
  PositiveReduction,
  NegativeReduction,
  LayeredNegativeReduction,
  Success,
  Failure,
  LoopDetection,
};

inline const char* step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::PositiveReduction: return "P";
    case StepKind::NegativeReduction: return "N";
    case StepKind::LayeredNegativeReduction: return "LN";
    case StepKind::Success: return "S";
    case StepKind::Failure: return "F";
    case StepKind::LoopDetection: return "L";
  }
  return "?";
}

struct Step {
  StepKind kind;
  std::set<int> removed_rules;                        // deleted rule ids
  std::vector<std::pair<int, Literal>> removed_literals;  // (rule id, literal)
  std::optional<std::set<Atom>> loop_set;             // present iff LoopDetection
};

using ReductionTrace = std::vector<Step>;

using StepResult = std::optional<std::pair<GroundProgram, Step>>;

namespace detail {

// Remove one literal from one rule, merging with an identical existing rule
// (programs are rule sets).
inline GroundProgram drop_literal(const GroundProgram& p, size_t rule_index, const Literal& l) {
  GroundProgram out;
  out.herbrand_base = p.herbrand_base;
  Rule changed = p.rules[rule_index];
  changed.body.erase(std::find(changed.body.begin(), changed.body.end(), l));
  bool duplicate = false;
  for (size_t i = 0; i < p.rules.size(); ++i) {
    if (i == rule_index) continue;
    if (same_shape(p.rules[i], changed)) duplicate = true;
  }
  for (size_t i = 0; i < p.rules.size(); ++i) {
    if (i == rule_index) {
      if (!duplicate) out.rules.push_back(changed);
    } else {
      out.rules.push_back(p.rules[i]);
    }
  }
  return out;
}

inline GroundProgram drop_rules(const GroundProgram& p, const std::set<int>& ids) {
  GroundProgram out;
  out.herbrand_base = p.herbrand_base;
  for (const auto& r : p.rules)
    if (!ids.count(r.id)) out.rules.push_back(r);
  return out;
}

}  // namespace detail

// P: delete a negative literal whose atom has no rules.
inline StepResult step_positive_reduction(const GroundProgram& p) {
  auto heads = p.heads();
  for (size_t i = 0; i < p.rules.size(); ++i)
    for (const auto& l : p.rules[i].body)
      if (l.negated && !heads.count(l.atom)) {
        Step s{StepKind::PositiveReduction, {}, {{p.rules[i].id, l}}, std::nullopt};
        return std::make_pair(detail::drop_literal(p, i, l), std::move(s));
      }
  return std::nullopt;
}

// N: delete a rule containing a negative literal whose atom is a fact.
inline StepResult step_negative_reduction(const GroundProgram& p) {
  auto facts = p.facts();
  for (const auto& r : p.rules)
    for (const auto& l : r.body)
      if (l.negated && facts.count(l.atom)) {
        Step s{StepKind::NegativeReduction, {r.id}, {}, std::nullopt};
        return std::make_pair(detail::drop_rules(p, {r.id}), std::move(s));
      }
  return std::nullopt;
}

// LN: as N, but the literal must lie outside every loop through its rule.
inline StepResult step_layered_negative_reduction(const GroundProgram& p, const RuleGraph& g) {
  auto facts = p.facts();
  for (size_t i = 0; i < p.rules.size(); ++i) {
    auto ob = overline_body(p, g, static_cast<int>(i));
    for (const auto& l : ob)
      if (l.negated && facts.count(l.atom)) {
        Step s{StepKind::LayeredNegativeReduction, {p.rules[i].id}, {}, std::nullopt};
        return std::make_pair(detail::drop_rules(p, {p.rules[i].id}), std::move(s));
      }
  }
  return std::nullopt;
}

// S: delete a positive body literal whose atom is a fact.
inline StepResult step_success(const GroundProgram& p) {
  auto facts = p.facts();
  for (size_t i = 0; i < p.rules.size(); ++i)
    for (const auto& l : p.rules[i].body)
      if (!l.negated && facts.count(l.atom)) {
        Step s{StepKind::Success, {}, {{p.rules[i].id, l}}, std::nullopt};
        return std::make_pair(detail::drop_literal(p, i, l), std::move(s));
      }
  return std::nullopt;
}

// F: delete a rule containing a positive literal whose atom has no rules.
inline StepResult step_failure(const GroundProgram& p) {
  auto heads = p.heads();
  for (const auto& r : p.rules)
    for (const auto& l : r.body)
      if (!l.negated && !heads.count(l.atom)) {
        Step s{StepKind::Failure, {r.id}, {}, std::nullopt};
        return std::make_pair(detail::drop_rules(p, {r.id}), std::move(s));
      }
  return std::nullopt;
}

// Greatest set A of occurring atoms such that every rule whose head is in A
// has a positive body atom in A (an unfounded set); computed by iterated
// removal from the all-atoms seed.
inline std::set<Atom> greatest_loop_set(const GroundProgram& p) {
  std::set<Atom> a;
  for (const auto& r : p.rules) {
    if (r.head) a.insert(*r.head);
    for (const auto& l : r.body) a.insert(l.atom);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& r : p.rules) {
      if (!r.head || !a.count(*r.head)) continue;
      bool positive_in_a = std::any_of(r.body.begin(), r.body.end(), [&](const Literal& l) {
        return !l.negated && a.count(l.atom);
      });
      if (!positive_in_a) {
        a.erase(*r.head);
        changed = true;
      }
    }
  }
  return a;
}

// L: delete every rule whose positive body meets the greatest loop set.
inline StepResult step_loop_detection(const GroundProgram& p) {
  std::set<Atom> a = greatest_loop_set(p);
  if (a.empty()) return std::nullopt;
  std::set<int> removed;
  for (const auto& r : p.rules)
    for (const auto& l : r.body)
      if (!l.negated && a.count(l.atom)) {
        removed.insert(r.id);
        break;
      }
  if (removed.empty()) return std::nullopt;
  Step s{StepKind::LoopDetection, removed, {}, std::move(a)};
  return std::make_pair(detail::drop_rules(p, removed), std::move(s));
}

namespace detail {

inline StepResult next_step(const GroundProgram& p, bool layered) {
  if (auto r = step_positive_reduction(p)) return r;
  if (layered) {
    RuleGraph g(p);
    if (auto r = step_layered_negative_reduction(p, g)) return r;
  } else {
    if (auto r = step_negative_reduction(p)) return r;
  }
  if (auto r = step_success(p)) return r;
  if (auto r = step_failure(p)) return r;
  if (auto r = step_loop_detection(p)) return r;
  return std::nullopt;
}

inline std::pair<GroundProgram, ReductionTrace> fixpoint(GroundProgram p, bool layered) {
  ReductionTrace trace;
  while (auto step = next_step(p, layered)) {
#ifndef NDEBUG
    // every step strictly shrinks (rules, body literals); cheap termination guard
    if (step->first.rules.size() >= p.rules.size()) {
      size_t before = 0, after = 0;
      for (const auto& r : p.rules) before += r.body.size();
      for (const auto& r : step->first.rules) after += r.body.size();
      assert(step->first.rules.size() == p.rules.size() && after < before);
    }
#endif
    trace.push_back(std::move(step->second));
    p = std::move(step->first);
  }
  return {std::move(p), std::move(trace)};
}

}  // namespace detail

// Fixpoint of {P, N, S, F, L}; unique (the system is confluent).
inline std::pair<GroundProgram, ReductionTrace> remainder(const GroundProgram& p) {
  return detail::fixpoint(p, false);
}

// Fixpoint of {P, LN, S, F, L}; the dependency graph is recomputed after
// every applied step.
inline std::pair<GroundProgram, ReductionTrace> layered_remainder(const GroundProgram& p) {
  return detail::fixpoint(p, true);
}

struct ThreeValuedModel {
  std::set<Atom> true_atoms;
  std::set<Atom> undefined_atoms;
  std::set<Atom> false_atoms;
};

// true = facts of the remainder, undefined = its other heads, false = the
// rest of the frozen base.
inline ThreeValuedModel well_founded_model(const GroundProgram& p) {
  GroundProgram rem = remainder(p).first;
  ThreeValuedModel m;
  m.true_atoms = rem.facts();
  for (const auto& h : rem.heads())
    if (!m.true_atoms.count(h)) m.undefined_atoms.insert(h);
  for (const auto& a : p.herbrand_base)
    if (!m.true_atoms.count(a) && !m.undefined_atoms.count(a)) m.false_atoms.insert(a);
  return m;
}

}  // namespace mh
