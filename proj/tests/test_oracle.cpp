#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mh/oracle.hpp"
#include "programs.hpp"

using namespace mh;
using fixtures::atoms;

TEST_CASE("brute-force stable models") {
  CHECK(all_stable_models_bruteforce(fixtures::vacation()).empty());

  auto sms = all_stable_models_bruteforce(parse_ground("a :- not b. b :- not a."));
  std::set<std::set<Atom>> sets;
  for (const auto& m : sms) sets.insert(m.true_atoms);
  CHECK(sets == std::set<std::set<Atom>>{atoms({"a"}), atoms({"b"})});

  // 2^5 sweep: {a,k} is the single stable model ({b,t} and {a,t} fail the
  // least-model check)
  auto sms2 = all_stable_models_bruteforce(fixtures::min_not_mh());
  REQUIRE(sms2.size() == 1);
  CHECK(sms2[0].true_atoms == atoms({"a", "k"}));
}

TEST_CASE("minimal classical models") {
  auto mm = all_minimal_models(fixtures::min_not_mh());
  std::set<std::set<Atom>> sets(mm.begin(), mm.end());
  CHECK(sets.count(atoms({"a", "k"})));
  CHECK(sets.count(atoms({"b", "t"})));
  CHECK(sets.count(atoms({"a", "t"})));

  CHECK(all_minimal_models(parse_ground("a.")) == std::vector<std::set<Atom>>{atoms({"a"})});

  auto mm2 = all_minimal_models(fixtures::hyp_not_min());
  std::set<std::set<Atom>> sets2(mm2.begin(), mm2.end());
  CHECK(sets2.count(atoms({"a"})));
  CHECK(!sets2.count(atoms({"a", "c"})));
}

TEST_CASE("randomized remainder agrees with the deterministic one") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CHECK(same_rules(randomized_remainder(fixtures::stubborn(), seed),
                     remainder(fixtures::stubborn()).first));
    CHECK(same_rules(randomized_remainder(parse_ground("a."), seed), parse_ground("a.")));
  }
}

TEST_CASE("random program generator") {
  GeneratorParams params{6, 10, 3, 0.5, 42};
  GroundProgram a = random_program(params);
  GroundProgram b = random_program(params);
  CHECK(same_rules(a, b));  // deterministic per seed

  GroundProgram definite = random_program({6, 10, 3, 0.0, 7});
  for (const auto& r : definite.rules)
    for (const auto& l : r.body) CHECK(!l.negated);

  CHECK(a.rules.size() <= 10);
  CHECK(a.herbrand_base.size() <= 6);
  for (const auto& r : a.rules) CHECK(r.body.size() <= 3);
  for (size_t i = 0; i < a.rules.size(); ++i)
    for (size_t j = i + 1; j < a.rules.size(); ++j)
      CHECK(!same_shape(a.rules[i], a.rules[j]));
}

TEST_CASE("oracle stable models match stable-classified MH models") {
  for (std::uint64_t seed = 50; seed < 90; ++seed) {
    GroundProgram p = random_program({5, 8, 3, 0.5, seed});
    if (auto failure = props::check_sm_subset(p)) FAIL(*failure);
  }
}

TEST_CASE("MH models are sound and exist on random programs") {
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    GroundProgram p = random_program({5, 8, 3, 0.5, seed});
    if (auto failure = props::check_existence(p)) FAIL(*failure);
    if (auto failure = props::check_wfm_compliance(p)) FAIL(*failure);
  }
}

TEST_CASE("short sweep stays clean") {
  SweepConfig cfg;
  cfg.programs = 40;
  cfg.atoms = 5;
  cfg.max_rules = 8;
  cfg.confluence_orders = 10;
  cfg.seed = 7;
  auto failure = run_sweep(cfg);
  if (failure) FAIL(failure->message, "\n", format_program(failure->program));
}
