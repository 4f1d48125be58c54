#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mh/syntax.hpp"
#include "programs.hpp"

using namespace mh;

TEST_CASE("parse single rule with negation") {
  Program p = parse_program("beach :- not mountain.");
  REQUIRE(p.rules.size() == 1);
  CHECK(p.rules[0].head == fixtures::atom("beach"));
  REQUIRE(p.rules[0].body.size() == 1);
  CHECK(p.rules[0].body[0].negated);
  CHECK(p.rules[0].body[0].atom == fixtures::atom("mountain"));
}

TEST_CASE("parse empty input") {
  Program p = parse_program("");
  CHECK(p.rules.empty());
}

TEST_CASE("parse facts, denials and variables") {
  Program p = parse_program("p(X) :- q(X), not r(X).  q(a). :- p(a), q(a). % comment");
  REQUIRE(p.rules.size() == 3);
  CHECK(p.rules[0].head->predicate == "p");
  CHECK(p.rules[1].is_fact());
  CHECK(p.rules[2].is_denial());
  CHECK(p.herbrand_constants == std::set<Term>{"a"});
}

TEST_CASE("syntax errors carry position") {
  CHECK_THROWS_AS(parse_program("a :- b"), ParseError);
  CHECK_THROWS_AS(parse_program("a :- ,b."), ParseError);
  CHECK_THROWS_AS(parse_program("a(f(x))."), ParseError);  // function symbols rejected
  try {
    parse_program("a.\nb :- @.");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("unsafe head variable rejected") {
  CHECK_THROWS_AS(parse_program("p(X) :- not q(X)."), ParseError);
  CHECK_THROWS_AS(parse_program("p(X) :- q(a)."), ParseError);
  CHECK_NOTHROW(parse_program("p(X) :- q(X), not r(X)."));
}

TEST_CASE("ground single constant") {
  GroundProgram g = parse_ground("p(X) :- q(X). q(a).");
  REQUIRE(g.rules.size() == 2);
  CHECK(format_program(g) == "p(a) :- q(a).\nq(a).\n");
}

TEST_CASE("ground two constants enumerates substitutions") {
  GroundProgram g = parse_ground("p(X) :- q(X). q(a). q(b).");
  // by hand: p(a):-q(a), p(b):-q(b), q(a), q(b)
  CHECK(g.rules.size() == 4);
  CHECK(g.herbrand_base == std::set<Atom>{Atom{"p", {"a"}}, Atom{"p", {"b"}}, Atom{"q", {"a"}},
                                          Atom{"q", {"b"}}});
}

TEST_CASE("ground is idempotent") {
  GroundProgram g = parse_ground("p(X) :- q(X). q(a). q(b). r :- not p(a).");
  GroundProgram g2 = ground(as_program(g));
  CHECK(same_rules(g, g2));
  CHECK(g.herbrand_base == g2.herbrand_base);
}

TEST_CASE("herbrand base equals atoms syntactically present") {
  GroundProgram g = fixtures::vacation();
  CHECK(g.herbrand_base == fixtures::atoms({"beach", "mountain", "travel"}));
}

TEST_CASE("format canonical and round-trips") {
  CHECK(format_program(GroundProgram{}) == "");
  CHECK(format_program(parse_ground("beach.")) == "beach.\n");

  std::string once = format_program(fixtures::vacation());
  std::string twice = format_program(parse_ground(once));
  CHECK(once == twice);
}

TEST_CASE("parse-format-parse is stable on assorted inputs") {
  for (const char* src : {
           "a. b :- a, not c. :- b, not a.",
           "p(X, Y) :- e(X, Y), not p(Y, X). e(a, b). e(b, c).",
           "x :- x.",
       }) {
    GroundProgram g1 = parse_ground(src);
    GroundProgram g2 = parse_ground(format_program(g1));
    CHECK(same_rules(g1, g2));
  }
}

TEST_CASE("duplicate rules collapse under grounding") {
  GroundProgram g = parse_ground("a :- b. a :- b.");
  CHECK(g.rules.size() == 1);
}
