// Subcommand front end for the solver: ground, remainder, graph, wfm, hyps,
// models, query, classify, fuzz. All output is deterministic for fixed
// inputs. Exit codes: 0 success, 1 semantic failure (e.g. a query that does
// not hold, a fuzz counterexample), 2 usage or input errors.
#pragma once

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mh/depgraph.hpp"
#include "mh/oracle.hpp"
#include "mh/reduction.hpp"
#include "mh/semantics.hpp"
#include "mh/syntax.hpp"

namespace mh::cli {

namespace detail {

inline GroundProgram load_ground(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ground(parse_program(buf.str()));
}

inline std::string atom_set(const std::set<Atom>& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& a : s) {
    if (!first) out += " ";
    out += a.to_string();
    first = false;
  }
  return out + "}";
}

inline std::string atom_list(const std::set<Atom>& s) {
  std::string out;
  for (const auto& a : s) {
    if (!out.empty()) out += " ";
    out += a.to_string();
  }
  return out;
}

inline nlohmann::json atoms_json(const std::set<Atom>& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& a : s) arr.push_back(a.to_string());
  return arr;
}

inline std::vector<Literal> parse_query(const std::string& text) {
  // reuse the rule parser: a query literal list is a denial body
  Program p = parse_program(":- " + text + ".");
  return p.rules.at(0).body;
}

inline std::string trace_line(const Step& s) {
  std::string line = step_kind_name(s.kind);
  line += " removed=";
  bool first = true;
  for (int id : s.removed_rules) {
    if (!first) line += ",";
    line += std::to_string(id);
    first = false;
  }
  if (s.loop_set) {
    line += " loop={";
    first = true;
    for (const auto& a : *s.loop_set) {
      if (!first) line += ",";
      line += a.to_string();
      first = false;
    }
    line += "}";
  }
  return line;
}

inline std::vector<MHModel> filtered_models(const GroundProgram& p,
                                            std::optional<std::uint64_t> limit, bool& complete) {
  MHResult result = mh_models(p, limit);
  complete = result.complete;
  return filter_denials(result.models, denials_of(p));
}

inline nlohmann::json model_json(const MHModel& m) {
  nlohmann::json j;
  j["true"] = atoms_json(m.model.true_atoms);
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : m.witnesses) ws.push_back(atoms_json(w));
  j["witnesses"] = ws;
  return j;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal Hypotheses semantics solver for normal logic programs"};
  app.require_subcommand(1);

  std::string file, query_text, property = "all";
  bool layered = false, trace = false, witnesses = false, json = false, classical = false;
  bool brave = false, cautious = false, relevance = false;
  std::uint64_t limit = 0;
  int programs = 1000, atoms = 8, rules = 12;
  std::uint64_t seed = 20240915;

  auto* cmd_ground = app.add_subcommand("ground", "ground a program and print it canonically");
  cmd_ground->add_option("file", file)->required();

  auto* cmd_rem = app.add_subcommand("remainder", "compute the remainder fixpoint");
  cmd_rem->add_option("file", file)->required();
  cmd_rem->add_flag("--layered", layered, "use layered negative reduction");
  cmd_rem->add_flag("--trace", trace, "append one line per applied step");

  auto* cmd_graph = app.add_subcommand("graph", "emit the rule dependency graph as DOT");
  cmd_graph->add_option("file", file)->required();

  auto* cmd_wfm = app.add_subcommand("wfm", "well-founded model");
  cmd_wfm->add_option("file", file)->required();
  cmd_wfm->add_flag("--json", json);

  auto* cmd_hyps = app.add_subcommand("hyps", "assumable hypotheses");
  cmd_hyps->add_option("file", file)->required();
  cmd_hyps->add_flag("--classical", classical, "use the remainder instead of the layered one");
  cmd_hyps->add_flag("--json", json);

  auto* cmd_models = app.add_subcommand("models", "enumerate MH models");
  cmd_models->add_option("file", file)->required();
  cmd_models->add_flag("--witnesses", witnesses, "show the witnessing hypothesis sets");
  cmd_models->add_flag("--json", json);
  cmd_models->add_option("--limit", limit, "cap on explored hypothesis subsets");

  auto* cmd_query = app.add_subcommand("query", "brave or cautious query answering");
  cmd_query->add_option("file", file)->required();
  cmd_query->add_option("query", query_text, "literal list, e.g. \"a, not b\"")->required();
  cmd_query->add_flag("--brave", brave);
  cmd_query->add_flag("--cautious", cautious);
  cmd_query->add_flag("--relevance", relevance, "restrict to the relevant subprogram");
  cmd_query->add_flag("--json", json);

  auto* cmd_classify = app.add_subcommand("classify", "tag MH models stable/minimal");
  cmd_classify->add_option("file", file)->required();

  auto* cmd_fuzz = app.add_subcommand("fuzz", "property sweep over random programs");
  cmd_fuzz->add_option("--programs", programs);
  cmd_fuzz->add_option("--atoms", atoms);
  cmd_fuzz->add_option("--rules", rules);
  cmd_fuzz->add_option("--seed", seed);
  cmd_fuzz->add_option("--property", property,
                       "all|confluence|sm-subset|existence|wfm|support|cumulativity|relevance");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (*cmd_ground) {
      out << format_program(detail::load_ground(file));
      return 0;
    }

    if (*cmd_rem) {
      GroundProgram p = detail::load_ground(file);
      auto [fixpoint, steps] = layered ? layered_remainder(p) : remainder(p);
      out << format_program(fixpoint);
      if (trace)
        for (const auto& s : steps) out << detail::trace_line(s) << "\n";
      return 0;
    }

    if (*cmd_graph) {
      GroundProgram p = detail::load_ground(file);
      RuleGraph g(p);
      out << "digraph rules {\n";
      for (int c = 0; c < g.scc_count(); ++c) {
        out << "  subgraph cluster_" << c << " {\n    label=\"scc " << c << "\";\n";
        for (size_t i = 0; i < p.rules.size(); ++i)
          if (g.scc_of(static_cast<int>(i)) == c)
            out << "    r" << p.rules[i].id << " [label=\"" << p.rules[i].to_string() << "\"];\n";
        out << "  }\n";
      }
      for (size_t i = 0; i < p.rules.size(); ++i)
        for (int j : g.edges_from(static_cast<int>(i)))
          out << "  r" << p.rules[i].id << " -> r" << p.rules[j].id << ";\n";
      out << "}\n";
      return 0;
    }

    if (*cmd_wfm) {
      ThreeValuedModel m = well_founded_model(strip_denials(detail::load_ground(file)));
      if (json) {
        nlohmann::json j;
        j["true"] = detail::atoms_json(m.true_atoms);
        j["undef"] = detail::atoms_json(m.undefined_atoms);
        j["false"] = detail::atoms_json(m.false_atoms);
        out << j.dump() << "\n";
      } else {
        auto line = [&](const char* label, const std::set<Atom>& s) {
          out << label << ":";
          std::string list = detail::atom_list(s);
          if (!list.empty()) out << " " << list;
          out << "\n";
        };
        line("true", m.true_atoms);
        line("undef", m.undefined_atoms);
        line("false", m.false_atoms);
      }
      return 0;
    }

    if (*cmd_hyps) {
      GroundProgram p = detail::load_ground(file);
      std::set<Atom> hyps = classical ? classical_hypotheses_set(p) : hypotheses_set(p);
      if (json) {
        nlohmann::json j;
        j["hyps"] = detail::atoms_json(hyps);
        out << j.dump() << "\n";
      } else {
        out << detail::atom_list(hyps) << "\n";
      }
      return 0;
    }

    if (*cmd_models) {
      GroundProgram p = detail::load_ground(file);
      bool complete = true;
      auto models = detail::filtered_models(
          p, limit ? std::optional<std::uint64_t>(limit) : std::nullopt, complete);
      if (json) {
        nlohmann::json j;
        j["complete"] = complete;
        j["models"] = nlohmann::json::array();
        for (const auto& m : models) j["models"].push_back(detail::model_json(m));
        out << j.dump() << "\n";
      } else {
        for (const auto& m : models) {
          out << detail::atom_set(m.model.true_atoms);
          if (witnesses) {
            out << " witnesses:";
            for (const auto& w : m.witnesses) out << " " << detail::atom_set(w);
          }
          out << "\n";
        }
        if (!complete) out << "incomplete: subset limit reached\n";
      }
      return 0;
    }

    if (*cmd_query) {
      if (brave == cautious) {
        err << "query requires exactly one of --brave / --cautious\n";
        return 2;
      }
      GroundProgram p = detail::load_ground(file);
      std::vector<Literal> q = detail::parse_query(query_text);
      QueryAnswer a = brave ? brave_query(p, q, relevance) : cautious_query(p, q, relevance);
      if (json) {
        nlohmann::json j;
        j["holds"] = a.holds;
        if (a.witness) j["witness"] = detail::atoms_json(a.witness->model.true_atoms);
        out << j.dump() << "\n";
      } else {
        out << (a.holds ? "yes" : "no") << "\n";
        if (a.witness)
          out << (brave ? "witness: " : "counter-model: ")
              << detail::atom_set(a.witness->model.true_atoms) << "\n";
      }
      return a.holds ? 0 : 1;
    }

    if (*cmd_classify) {
      GroundProgram p = detail::load_ground(file);
      bool complete = true;
      auto models = detail::filtered_models(p, std::nullopt, complete);
      GroundProgram core = strip_denials(p);
      auto minimal = all_minimal_models(core);
      for (const auto& m : models) {
        bool stable = is_stable_model(core, m.model);
        bool is_min = std::find(minimal.begin(), minimal.end(), m.model.true_atoms) !=
                      minimal.end();
        out << detail::atom_set(m.model.true_atoms) << " " << (stable ? "stable" : "non-stable")
            << " " << (is_min ? "minimal" : "non-minimal") << "\n";
      }
      return 0;
    }

    if (*cmd_fuzz) {
      SweepConfig cfg;
      cfg.programs = programs;
      cfg.atoms = atoms;
      cfg.max_rules = rules;
      cfg.seed = seed;
      cfg.property = property;
      if (auto failure = run_sweep(cfg)) {
        err << failure->message << "\n" << format_program(failure->program);
        return 1;
      }
      out << "ok: " << programs << " programs, property " << property << "\n";
      return 0;
    }
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    err << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace mh::cli
