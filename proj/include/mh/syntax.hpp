// Rule language: atoms, literals, rules, programs, parsing, grounding and
// canonical text output.
//
// Concrete syntax:
//   fact.                      e.g.  beach.
//   head :- lit, ..., lit.    e.g.  beach :- not mountain.
//   :- lit, ..., lit.          denial integrity constraint
//   not a                      default negation
//   p(X, a)                    terms are constants (lowercase) or variables
//                              (uppercase / underscore initial); % starts a
//                              line comment.
#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mh {

using Term = std::string;

inline bool is_variable(const Term& t) {
  return !t.empty() && (std::isupper(static_cast<unsigned char>(t[0])) || t[0] == '_');
}

struct Atom {
  std::string predicate;
  std::vector<Term> args;

  auto operator<=>(const Atom&) const = default;

  bool is_ground() const {
    return std::none_of(args.begin(), args.end(), [](const Term& t) { return is_variable(t); });
  }

  std::string to_string() const {
    if (args.empty()) return predicate;
    std::string s = predicate + "(";
    for (size_t i = 0; i < args.size(); ++i) {
      if (i) s += ", ";
      s += args[i];
    }
    return s + ")";
  }
};

struct Literal {
  Atom atom;
  bool negated = false;

  auto operator<=>(const Literal&) const = default;

  std::string to_string() const { return negated ? "not " + atom.to_string() : atom.to_string(); }
};

// Body literals are kept sorted and duplicate-free; a rule body is a set.
// head == nullopt encodes a denial (head ⊥).
struct Rule {
  std::optional<Atom> head;
  std::vector<Literal> body;
  int id = -1;

  bool is_denial() const { return !head.has_value(); }
  bool is_fact() const { return head.has_value() && body.empty(); }

  void normalize_body() {
    std::sort(body.begin(), body.end());
    body.erase(std::unique(body.begin(), body.end()), body.end());
  }

  bool body_contains(const Literal& l) const {
    return std::binary_search(body.begin(), body.end(), l);
  }

  // Identity-free comparison key; denials sort after headed rules.
  friend bool same_shape(const Rule& a, const Rule& b) {
    return a.head == b.head && a.body == b.body;
  }

  std::string to_string() const {
    std::string s;
    if (head) s = head->to_string();
    if (!body.empty()) {
      s += head ? " :- " : ":- ";
      for (size_t i = 0; i < body.size(); ++i) {
        if (i) s += ", ";
        s += body[i].to_string();
      }
    }
    return s + ".";
  }
};

inline bool rule_less(const Rule& a, const Rule& b) {
  if (a.is_denial() != b.is_denial()) return b.is_denial();
  if (a.head != b.head) return a.head < b.head;
  return a.body < b.body;
}

struct Program {
  std::vector<Rule> rules;
  std::set<Term> herbrand_constants;
};

struct GroundProgram {
  std::vector<Rule> rules;          // ids unique; order is the canonical order
  std::set<Atom> herbrand_base;     // frozen; never shrinks under rule deletion

  std::set<Atom> heads() const {
    std::set<Atom> h;
    for (const auto& r : rules)
      if (r.head) h.insert(*r.head);
    return h;
  }

  std::set<Atom> facts() const {
    std::set<Atom> f;
    for (const auto& r : rules)
      if (r.is_fact()) f.insert(*r.head);
    return f;
  }

  const Rule* rule_by_id(int id) const {
    for (const auto& r : rules)
      if (r.id == id) return &r;
    return nullptr;
  }
};

// Rule-set equality, ignoring ids and the frozen base.
inline bool same_rules(const GroundProgram& a, const GroundProgram& b) {
  if (a.rules.size() != b.rules.size()) return false;
  auto key = [](const GroundProgram& p) {
    std::vector<std::pair<std::optional<Atom>, std::vector<Literal>>> ks;
    ks.reserve(p.rules.size());
    for (const auto& r : p.rules) ks.emplace_back(r.head, r.body);
    std::sort(ks.begin(), ks.end());
    return ks;
  };
  return key(a) == key(b);
}

struct ParseError : std::runtime_error {
  int line, column;
  ParseError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " at line " + std::to_string(line_) + ", column " +
                           std::to_string(col_)),
        line(line_), column(col_) {}
};

namespace detail {

class Lexer {
 public:
  struct Token {
    enum Kind { Ident, Arrow, Comma, Dot, LParen, RParen, End } kind;
    std::string text;
    int line, col;
  };

  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_ws();
    int line = line_, col = col_;
    if (pos_ >= src_.size()) return {Token::End, "", line, col};
    char c = src_[pos_];
    if (c == ',') { advance(); return {Token::Comma, ",", line, col}; }
    if (c == '.') { advance(); return {Token::Dot, ".", line, col}; }
    if (c == '(') { advance(); return {Token::LParen, "(", line, col}; }
    if (c == ')') { advance(); return {Token::RParen, ")", line, col}; }
    if (c == ':') {
      advance();
      if (pos_ >= src_.size() || src_[pos_] != '-')
        throw ParseError("expected '-' after ':'", line_, col_);
      advance();
      return {Token::Arrow, ":-", line, col};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string t;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        t += src_[pos_];
        advance();
      }
      return {Token::Ident, t, line, col};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line, col);
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') { ++line_; col_ = 1; } else { ++col_; }
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : lex_(src) { bump(); }

  Program parse() {
    Program p;
    while (tok_.kind != Lexer::Token::End) {
      Rule r = parse_rule();
      r.id = static_cast<int>(p.rules.size());
      check_safety(r, r.id);
      p.rules.push_back(std::move(r));
    }
    for (const auto& r : p.rules) {
      auto collect = [&](const Atom& a) {
        for (const auto& t : a.args)
          if (!is_variable(t)) p.herbrand_constants.insert(t);
      };
      if (r.head) collect(*r.head);
      for (const auto& l : r.body) collect(l.atom);
    }
    return p;
  }

 private:
  void bump() { tok_ = lex_.next(); }

  void expect(Lexer::Token::Kind k, const char* what) {
    if (tok_.kind != k) throw ParseError(std::string("expected ") + what, tok_.line, tok_.col);
    bump();
  }

  Atom parse_atom() {
    if (tok_.kind != Lexer::Token::Ident)
      throw ParseError("expected atom", tok_.line, tok_.col);
    if (is_variable(tok_.text))
      throw ParseError("predicate symbol must be lowercase", tok_.line, tok_.col);
    Atom a{tok_.text, {}};
    bump();
    if (tok_.kind == Lexer::Token::LParen) {
      bump();
      while (true) {
        if (tok_.kind != Lexer::Token::Ident)
          throw ParseError("expected term", tok_.line, tok_.col);
        std::string term = tok_.text;
        int tl = tok_.line, tc = tok_.col;
        bump();
        if (tok_.kind == Lexer::Token::LParen)
          throw ParseError("function symbols are not supported", tl, tc);
        a.args.push_back(term);
        if (tok_.kind == Lexer::Token::Comma) { bump(); continue; }
        break;
      }
      expect(Lexer::Token::RParen, "')'");
    }
    return a;
  }

  Literal parse_literal() {
    bool neg = false;
    if (tok_.kind == Lexer::Token::Ident && tok_.text == "not") {
      neg = true;
      bump();
    }
    return Literal{parse_atom(), neg};
  }

  Rule parse_rule() {
    Rule r;
    if (tok_.kind == Lexer::Token::Arrow) {
      // denial
      int line = tok_.line, col = tok_.col;
      bump();
      r.head = std::nullopt;
      parse_body(r);
      if (r.body.empty()) throw ParseError("denial requires a non-empty body", line, col);
    } else {
      r.head = parse_atom();
      if (tok_.kind == Lexer::Token::Arrow) {
        bump();
        parse_body(r);
      }
    }
    expect(Lexer::Token::Dot, "'.'");
    r.normalize_body();
    return r;
  }

  void parse_body(Rule& r) {
    r.body.push_back(parse_literal());
    while (tok_.kind == Lexer::Token::Comma) {
      bump();
      r.body.push_back(parse_literal());
    }
  }

  static void check_safety(const Rule& r, int index) {
    if (!r.head) return;
    std::set<Term> positive_vars;
    for (const auto& l : r.body)
      if (!l.negated)
        for (const auto& t : l.atom.args)
          if (is_variable(t)) positive_vars.insert(t);
    for (const auto& t : r.head->args)
      if (is_variable(t) && !positive_vars.count(t))
        throw ParseError("unsafe rule " + std::to_string(index) + ": head variable " + t +
                             " not bound by a positive body literal",
                         1, 1);
  }

  Lexer lex_;
  Lexer::Token tok_{};
};

}  // namespace detail

inline Program parse_program(std::string_view text) { return detail::Parser(text).parse(); }

// Rule instantiation over the program's constants, all variables of the rule
// substituted. Result is canonically sorted, duplicate rules merged, ids
// reassigned by position, herbrand_base frozen to the atoms present.
inline GroundProgram ground(const Program& program) {
  std::vector<Term> constants(program.herbrand_constants.begin(),
                              program.herbrand_constants.end());
  std::vector<Rule> ground_rules;

  for (const auto& r : program.rules) {
    std::set<Term> vars;
    auto collect = [&](const Atom& a) {
      for (const auto& t : a.args)
        if (is_variable(t)) vars.insert(t);
    };
    if (r.head) collect(*r.head);
    for (const auto& l : r.body) collect(l.atom);

    if (vars.empty()) {
      ground_rules.push_back(r);
      continue;
    }
    std::vector<Term> var_list(vars.begin(), vars.end());
    // one index per variable, odometer-style over the constants
    std::vector<size_t> idx(var_list.size(), 0);
    if (constants.empty()) continue;  // no ground instances exist
    while (true) {
      std::map<Term, Term> subst;
      for (size_t i = 0; i < var_list.size(); ++i) subst[var_list[i]] = constants[idx[i]];
      auto apply = [&](Atom a) {
        for (auto& t : a.args)
          if (is_variable(t)) t = subst.at(t);
        return a;
      };
      Rule inst;
      if (r.head) inst.head = apply(*r.head);
      for (const auto& l : r.body) inst.body.push_back({apply(l.atom), l.negated});
      inst.normalize_body();
      ground_rules.push_back(std::move(inst));

      size_t k = 0;
      for (; k < idx.size(); ++k) {
        if (++idx[k] < constants.size()) break;
        idx[k] = 0;
      }
      if (k == idx.size()) break;
    }
  }

  std::sort(ground_rules.begin(), ground_rules.end(), rule_less);
  ground_rules.erase(std::unique(ground_rules.begin(), ground_rules.end(),
                                 [](const Rule& a, const Rule& b) { return same_shape(a, b); }),
                     ground_rules.end());

  GroundProgram g;
  for (size_t i = 0; i < ground_rules.size(); ++i) {
    ground_rules[i].id = static_cast<int>(i);
    if (ground_rules[i].head) g.herbrand_base.insert(*ground_rules[i].head);
    for (const auto& l : ground_rules[i].body) g.herbrand_base.insert(l.atom);
  }
  g.rules = std::move(ground_rules);
  return g;
}

inline Program as_program(const GroundProgram& g) {
  Program p;
  p.rules = g.rules;
  for (const auto& a : g.herbrand_base)
    for (const auto& t : a.args) p.herbrand_constants.insert(t);
  return p;
}

inline std::string format_program(const GroundProgram& p) {
  std::vector<const Rule*> sorted;
  sorted.reserve(p.rules.size());
  for (const auto& r : p.rules) sorted.push_back(&r);
  std::sort(sorted.begin(), sorted.end(),
            [](const Rule* a, const Rule* b) { return rule_less(*a, *b); });
  std::string out;
  for (const Rule* r : sorted) {
    out += r->to_string();
    out += '\n';
  }
  return out;
}

inline GroundProgram parse_ground(std::string_view text) { return ground(parse_program(text)); }

}  // namespace mh
