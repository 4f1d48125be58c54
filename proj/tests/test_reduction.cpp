#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mh/oracle.hpp"
#include "mh/reduction.hpp"
#include "programs.hpp"

using namespace mh;

namespace {

size_t total_body_literals(const GroundProgram& p) {
  size_t n = 0;
  for (const auto& r : p.rules) n += r.body.size();
  return n;
}

}  // namespace

TEST_CASE("positive reduction") {
  SUBCASE("deletes a negation with no rules for its atom") {
    GroundProgram p = parse_ground("mountain :- not travel.");
    auto r = step_positive_reduction(p);
    REQUIRE(r);
    CHECK(format_program(r->first) == "mountain.\n");
    CHECK(r->second.kind == StepKind::PositiveReduction);
    CHECK(r->second.removed_literals.size() == 1);
  }
  SUBCASE("not applicable on a fact") {
    CHECK(!step_positive_reduction(parse_ground("a.")));
  }
  SUBCASE("not applicable when the atom has a rule") {
    CHECK(!step_positive_reduction(parse_ground("a :- not b. b :- c.")));
  }
}

TEST_CASE("negative reduction") {
  SUBCASE("deletes a rule negated on a fact") {
    GroundProgram p = fixtures::stubborn();
    auto r = step_negative_reduction(p);
    REQUIRE(r);
    const Rule* removed = p.rule_by_id(*r->second.removed_rules.begin());
    REQUIRE(removed);
    CHECK(removed->head == fixtures::atom("travel"));
  }
  SUBCASE("not applicable when the atom is not a fact") {
    CHECK(!step_negative_reduction(parse_ground("a :- not b.")));
  }
  SUBCASE("direct application") {
    GroundProgram p = parse_ground("b. a :- not b, c.");
    auto r = step_negative_reduction(p);
    REQUIRE(r);
    CHECK(format_program(r->first) == "b.\n");
  }
}

TEST_CASE("layered negative reduction") {
  SUBCASE("blocked inside a loop: stubborn program is its own fixpoint") {
    GroundProgram p = fixtures::stubborn();
    RuleGraph g(p);
    CHECK(!step_layered_negative_reduction(p, g));
  }
  SUBCASE("coincides with negative reduction when loop-free") {
    GroundProgram p = parse_ground("b. a :- not b.");
    RuleGraph g(p);
    auto r = step_layered_negative_reduction(p, g);
    REQUIRE(r);
    CHECK(format_program(r->first) == "b.\n");
  }
  SUBCASE("blocked when the atom's other rule depends on the candidate") {
    GroundProgram p = parse_ground("b. a :- not b. b :- a.");
    RuleGraph g(p);
    CHECK(!step_layered_negative_reduction(p, g));
  }
}

TEST_CASE("success") {
  SUBCASE("removes a positive fact from a body") {
    GroundProgram p = parse_ground("b. a :- b.");
    auto r = step_success(p);
    REQUIRE(r);
    CHECK(format_program(r->first) == "a.\nb.\n");
  }
  SUBCASE("not applicable without the fact") {
    CHECK(!step_success(parse_ground("a :- b.")));
  }
  SUBCASE("keeps the remaining body") {
    GroundProgram p = parse_ground("b. a :- b, not c.");
    auto r = step_success(p);
    REQUIRE(r);
    CHECK(format_program(r->first) == "a :- not c.\nb.\n");
  }
}

TEST_CASE("failure") {
  SUBCASE("deletes a rule with an unsupported positive literal") {
    GroundProgram p = parse_ground("a :- b.");
    auto r = step_failure(p);
    REQUIRE(r);
    CHECK(r->first.rules.empty());
  }
  SUBCASE("not applicable when the atom has a rule") {
    CHECK(!step_failure(parse_ground("b. a :- b.")));
  }
  SUBCASE("no rules for a") {
    GroundProgram p = parse_ground("t :- a, b. b :- not a.");
    auto r = step_failure(p);
    REQUIRE(r);
    const Rule* removed = p.rule_by_id(*r->second.removed_rules.begin());
    CHECK(removed->head == fixtures::atom("t"));
  }
}

TEST_CASE("loop detection") {
  SUBCASE("unfounded positive loop removed whole") {
    GroundProgram p = parse_ground("a :- b. b :- a.");
    auto r = step_loop_detection(p);
    REQUIRE(r);
    CHECK(r->first.rules.empty());
    REQUIRE(r->second.loop_set);
    CHECK(r->second.loop_set->count(fixtures::atom("a")));
    CHECK(r->second.loop_set->count(fixtures::atom("b")));
  }
  SUBCASE("not applicable on purely negative bodies") {
    CHECK(!step_loop_detection(parse_ground("a :- not b.")));
    CHECK(!step_loop_detection(fixtures::vacation()));
  }
}

TEST_CASE("remainder of the stubborn program with its full step trace") {
  auto [rem, trace] = remainder(fixtures::stubborn());
  CHECK(format_program(rem) == "beach.\nmountain.\n");
  REQUIRE(trace.size() == 3);
  CHECK(trace[0].kind == StepKind::NegativeReduction);
  CHECK(trace[1].kind == StepKind::PositiveReduction);
  CHECK(trace[2].kind == StepKind::NegativeReduction);
}

TEST_CASE("remainder fixpoints") {
  SUBCASE("vacation program is unchanged") {
    auto [rem, trace] = remainder(fixtures::vacation());
    CHECK(same_rules(rem, fixtures::vacation()));
    CHECK(trace.empty());
  }
  SUBCASE("success then done") {
    auto [rem, trace] = remainder(parse_ground("a. b :- a."));
    CHECK(format_program(rem) == "a.\nb.\n");
  }
  SUBCASE("idempotent") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      GroundProgram p = random_program({6, 10, 3, 0.5, seed});
      GroundProgram rem = remainder(p).first;
      CHECK(same_rules(remainder(rem).first, rem));
    }
  }
}

TEST_CASE("layered remainder fixpoints") {
  SUBCASE("stubborn program unchanged") {
    auto [rem, trace] = layered_remainder(fixtures::stubborn());
    CHECK(same_rules(rem, fixtures::stubborn()));
    CHECK(trace.empty());
  }
  SUBCASE("coincides with remainder when loop-free") {
    auto [rem, trace] = layered_remainder(parse_ground("b. a :- not b."));
    CHECK(format_program(rem) == "b.\n");
  }
  SUBCASE("passport program unchanged") {
    CHECK(same_rules(layered_remainder(fixtures::passport()).first, fixtures::passport()));
  }
  SUBCASE("idempotent") {
    for (std::uint64_t seed = 30; seed < 50; ++seed) {
      GroundProgram p = random_program({6, 10, 3, 0.5, seed});
      GroundProgram rem = layered_remainder(p).first;
      CHECK(same_rules(layered_remainder(rem).first, rem));
    }
  }
}

TEST_CASE("remainder equals layered remainder on loop-free programs") {
  for (std::uint64_t seed = 60; seed < 100; ++seed) {
    GroundProgram p = random_program({6, 10, 3, 0.5, seed});
    RuleGraph g(p);
    bool acyclic = true;
    for (int i = 0; i < g.rule_count() && acyclic; ++i)
      if (g.depends_on(i, i)) acyclic = false;
    if (!acyclic) continue;
    CHECK(same_rules(remainder(p).first, layered_remainder(p).first));
  }
}

TEST_CASE("every step strictly shrinks (rules, body literals) lexicographically") {
  for (std::uint64_t seed = 120; seed < 150; ++seed) {
    GroundProgram p = random_program({6, 12, 3, 0.5, seed});
    GroundProgram cur = p;
    while (true) {
      StepResult next;
      if ((next = step_positive_reduction(cur)) || (next = step_negative_reduction(cur)) ||
          (next = step_success(cur)) || (next = step_failure(cur)) ||
          (next = step_loop_detection(cur))) {
        bool fewer_rules = next->first.rules.size() < cur.rules.size();
        bool fewer_literals = next->first.rules.size() == cur.rules.size() &&
                              total_body_literals(next->first) < total_body_literals(cur);
        CHECK((fewer_rules || fewer_literals));
        cur = next->first;
      } else {
        break;
      }
    }
  }
}

TEST_CASE("confluence: random application orders agree") {
  for (std::uint64_t seed = 160; seed < 190; ++seed) {
    GroundProgram p = random_program({6, 12, 3, 0.5, seed});
    if (auto failure = props::check_confluence(p, 50, seed))
      FAIL(*failure);
  }
}

TEST_CASE("well-founded model") {
  SUBCASE("stubborn program") {
    ThreeValuedModel m = well_founded_model(fixtures::stubborn());
    CHECK(m.true_atoms == fixtures::atoms({"beach", "mountain"}));
    CHECK(m.undefined_atoms.empty());
    CHECK(m.false_atoms == fixtures::atoms({"travel"}));
  }
  SUBCASE("vacation program: everything undefined") {
    ThreeValuedModel m = well_founded_model(fixtures::vacation());
    CHECK(m.true_atoms.empty());
    CHECK(m.undefined_atoms == fixtures::atoms({"beach", "mountain", "travel"}));
    CHECK(m.false_atoms.empty());
  }
  SUBCASE("single fact") {
    ThreeValuedModel m = well_founded_model(parse_ground("a."));
    CHECK(m.true_atoms == fixtures::atoms({"a"}));
  }
  SUBCASE("partition covers the frozen base exactly once") {
    for (std::uint64_t seed = 200; seed < 230; ++seed) {
      GroundProgram p = random_program({6, 10, 3, 0.5, seed});
      ThreeValuedModel m = well_founded_model(p);
      std::set<Atom> all;
      all.insert(m.true_atoms.begin(), m.true_atoms.end());
      all.insert(m.undefined_atoms.begin(), m.undefined_atoms.end());
      all.insert(m.false_atoms.begin(), m.false_atoms.end());
      CHECK(all == p.herbrand_base);
      CHECK(all.size() ==
            m.true_atoms.size() + m.undefined_atoms.size() + m.false_atoms.size());
    }
  }
}
