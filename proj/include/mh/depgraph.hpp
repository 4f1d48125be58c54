// Rule-level dependency graph: SCCs, rule-to-rule reachability, the part of
// a body not in loop with its rule, relevant subprograms and support checks.
//
// Rule r_a depends on rule r (r_a ~> r) iff head(r) occurs, positively or
// negatively, in body(r_a), or transitively so through another rule. Denials
// have no head and are never depended upon.
#pragma once

#include <vector>

#include "mh/syntax.hpp"

namespace mh {

// Total two-valued interpretation: atoms of base not in true_atoms are false.
struct Interpretation {
  std::set<Atom> base;
  std::set<Atom> true_atoms;

  bool is_true(const Atom& a) const { return true_atoms.count(a) > 0; }

  bool satisfies(const Literal& l) const { return l.negated ? !is_true(l.atom) : is_true(l.atom); }

  bool satisfies_all(const std::vector<Literal>& body) const {
    return std::all_of(body.begin(), body.end(),
                       [&](const Literal& l) { return satisfies(l); });
  }
};

class RuleGraph {
 public:
  explicit RuleGraph(const GroundProgram& p) : n_(p.rules.size()) {
    std::map<Atom, std::vector<int>> rules_for;  // head atom -> rule indices
    for (int i = 0; i < n_; ++i)
      if (p.rules[i].head) rules_for[*p.rules[i].head].push_back(i);

    adj_.resize(n_);
    for (int i = 0; i < n_; ++i) {
      std::set<int> out;
      for (const auto& l : p.rules[i].body) {
        auto it = rules_for.find(l.atom);
        if (it != rules_for.end()) out.insert(it->second.begin(), it->second.end());
      }
      adj_[i].assign(out.begin(), out.end());
    }
    compute_sccs();
    compute_scc_reach();
  }

  int rule_count() const { return n_; }
  int scc_count() const { return scc_count_; }
  int scc_of(int rule_index) const { return scc_of_[rule_index]; }
  const std::vector<int>& edges_from(int rule_index) const { return adj_[rule_index]; }

  // r_a ~> r: directed path of length >= 1 from ra to r.
  bool depends_on(int ra, int r) const {
    for (int mid : adj_[ra])
      if (scc_reach_[scc_of_[mid]][scc_of_[r]]) return true;
    return false;
  }

 private:
  void compute_sccs() {
    // iterative Tarjan
    scc_of_.assign(n_, -1);
    std::vector<int> index(n_, -1), lowlink(n_, 0);
    std::vector<bool> on_stack(n_, false);
    std::vector<int> stack;
    int next_index = 0;
    scc_count_ = 0;

    struct Frame { int v; size_t child; };
    for (int root = 0; root < n_; ++root) {
      if (index[root] != -1) continue;
      std::vector<Frame> frames{{root, 0}};
      index[root] = lowlink[root] = next_index++;
      stack.push_back(root);
      on_stack[root] = true;
      while (!frames.empty()) {
        auto& [v, child] = frames.back();
        if (child < adj_[v].size()) {
          int w = adj_[v][child++];
          if (index[w] == -1) {
            index[w] = lowlink[w] = next_index++;
            stack.push_back(w);
            on_stack[w] = true;
            frames.push_back({w, 0});
          } else if (on_stack[w]) {
            lowlink[v] = std::min(lowlink[v], index[w]);
          }
        } else {
          if (lowlink[v] == index[v]) {
            int w;
            do {
              w = stack.back();
              stack.pop_back();
              on_stack[w] = false;
              scc_of_[w] = scc_count_;
            } while (w != v);
            ++scc_count_;
          }
          int done = v;
          frames.pop_back();
          if (!frames.empty())
            lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[done]);
        }
      }
    }
  }

  void compute_scc_reach() {
    // reflexive-transitive closure over the condensation; Tarjan emits SCCs
    // in reverse topological order, so successors are already complete.
    scc_reach_.assign(scc_count_, std::vector<bool>(scc_count_, false));
    for (int c = 0; c < scc_count_; ++c) scc_reach_[c][c] = true;
    std::vector<std::vector<int>> scc_edges(scc_count_);
    for (int v = 0; v < n_; ++v)
      for (int w : adj_[v])
        if (scc_of_[v] != scc_of_[w]) scc_edges[scc_of_[v]].push_back(scc_of_[w]);
    for (int c = 0; c < scc_count_; ++c)
      for (int d : scc_edges[c])
        for (int e = 0; e < scc_count_; ++e)
          if (scc_reach_[d][e]) scc_reach_[c][e] = true;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> scc_of_;
  std::vector<std::vector<bool>> scc_reach_;
  int scc_count_ = 0;
};

inline RuleGraph build_dependency_graph(const GroundProgram& p) { return RuleGraph(p); }

// Largest subset of body(r) whose atoms have no rule depending on r.
inline std::vector<Literal> overline_body(const GroundProgram& p, const RuleGraph& g,
                                          int rule_index) {
  const Rule& r = p.rules[rule_index];
  std::vector<Literal> kept;
  for (const auto& l : r.body) {
    bool in_loop = false;
    for (int i = 0; i < static_cast<int>(p.rules.size()) && !in_loop; ++i)
      if (p.rules[i].head && *p.rules[i].head == l.atom && g.depends_on(i, rule_index))
        in_loop = true;
    if (!in_loop) kept.push_back(l);
  }
  return kept;
}

// Rules with head a plus everything some rule for a depends on. The base of
// the result is the atoms of the kept rules plus a itself.
inline GroundProgram relevant_part(const GroundProgram& p, const Atom& a) {
  RuleGraph g(p);
  std::vector<int> a_rules;
  for (int i = 0; i < static_cast<int>(p.rules.size()); ++i)
    if (p.rules[i].head && *p.rules[i].head == a) a_rules.push_back(i);

  std::set<int> keep(a_rules.begin(), a_rules.end());
  for (int r = 0; r < static_cast<int>(p.rules.size()); ++r)
    for (int ra : a_rules)
      if (g.depends_on(ra, r)) { keep.insert(r); break; }

  GroundProgram out;
  out.herbrand_base.insert(a);
  for (int i : keep) {
    out.rules.push_back(p.rules[i]);
    if (p.rules[i].head) out.herbrand_base.insert(*p.rules[i].head);
    for (const auto& l : p.rules[i].body) out.herbrand_base.insert(l.atom);
  }
  return out;
}

struct SupportStatus {
  bool classical = false;
  bool layered = false;
};

inline SupportStatus support_status(const GroundProgram& p, const RuleGraph& g,
                                    const Interpretation& i, const Atom& a) {
  SupportStatus s;
  for (int r = 0; r < static_cast<int>(p.rules.size()); ++r) {
    if (!p.rules[r].head || *p.rules[r].head != a) continue;
    if (i.satisfies_all(p.rules[r].body)) s.classical = true;
    if (i.satisfies_all(overline_body(p, g, r))) s.layered = true;
    if (s.classical && s.layered) break;
  }
  return s;
}

}  // namespace mh
