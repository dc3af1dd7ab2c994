#include "doctest.h"

#include <set>

#include "mccarthy/parser.hpp"
#include "mccarthy/term.hpp"
#include "support.hpp"

using namespace mccarthy;

TEST_CASE("alpha equivalence on binder renamings") {
  CHECK(alpha_eq(parse_term("\\x. x"), parse_term("\\y. y")));
  CHECK_FALSE(alpha_eq(parse_term("\\x y. x"), parse_term("\\x y. y")));
  // Ω with both binders renamed by hand
  CHECK(alpha_eq(ref("OMEGA"), parse_term("(\\z. z z) (\\z. z z)")));
  // free variables must match by name
  CHECK_FALSE(alpha_eq(var("a"), var("b")));
  CHECK(alpha_eq(parse_term("\\x. x a"), parse_term("\\y. y a")));
}

TEST_CASE("alpha equivalence resolves references") {
  CHECK(alpha_eq(ref("K"), parse_term("\\a b. a")));
  CHECK(alpha_eq(ref("T"), ref("K")));
  CHECK_FALSE(alpha_eq(ref("K"), ref("F")));
  CHECK_THROWS_AS(alpha_eq(ref("NO_SUCH"), ref("I")), ResolveError);
}

TEST_CASE("substitution") {
  CHECK(alpha_eq(substitute(var("x"), "x", ref("I")), ref("I")));
  // bound occurrence untouched
  CHECK(alpha_eq(substitute(parse_term("\\x. x"), "x", ref("OMEGA")), parse_term("\\x. x")));
  // capture avoidance: λy.x [x := y] renames the binder
  Term r = substitute(parse_term("\\y. x"), "x", var("y"));
  CHECK(r->kind == TermNode::Kind::Lam);
  CHECK(r->name != "y");
  CHECK(free_vars(r) == std::set<std::string>{"y"});
  CHECK(alpha_eq(r, lam("z", var("y"))));
}

TEST_CASE("substitution lemma") {
  // t[x:=a][y:=b] α= t[y:=b][x:=a[y:=b]] when x ≠ y and x ∉ FV(b)
  testsupport::TermGen gen(20240001);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    Term t = gen.term(12);
    Term a = gen.term(6);
    Term b = gen.term(6);
    if (free_vars(b).count("u")) continue;  // x = u must not be free in b
    Term lhs = substitute(substitute(t, "u", a), "v", b);
    Term rhs = substitute(substitute(t, "v", b), "u", substitute(a, "v", b));
    CHECK(alpha_eq(lhs, rhs));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("canonical forms identify exactly the alpha-equivalent terms") {
  CHECK(canonicalize(parse_term("\\x. x")) == canonicalize(parse_term("\\y. y")));
  CHECK(canonicalize(parse_term("\\x y. x")) != canonicalize(parse_term("\\x y. y")));
  CHECK(canonicalize(ref("OMEGA")) == canonicalize(parse_term("(\\q. q q) (\\r. r r)")));

  testsupport::TermGen gen(20240002);
  for (int i = 0; i < 400; ++i) {
    Term a = gen.term(1 + gen.pick(30));
    Term b = gen.pick(2) == 0 ? testsupport::rename_binders(a, "_r") : gen.term(1 + gen.pick(30));
    bool eq = alpha_eq(a, b);
    bool canon_eq = canonicalize(a) == canonicalize(b);
    CHECK(eq == canon_eq);
  }
}

TEST_CASE("canonicalize is invariant under consistent renaming") {
  testsupport::TermGen gen(20240003);
  for (int i = 0; i < 200; ++i) {
    Term t = gen.term(1 + gen.pick(30));
    CHECK(canonicalize(t) == canonicalize(testsupport::rename_binders(t, "_z")));
  }
}

TEST_CASE("free variables") {
  CHECK(free_vars(parse_term("\\x. x y")) == std::set<std::string>{"y"});
  CHECK(free_vars(ref("OMEGA")).empty());
  CHECK(free_vars(app(ref("THETA"), parse_term("\\x. x y"))) == std::set<std::string>{"y"});
}

TEST_CASE("definition environment") {
  DefEnv env;
  CHECK(alpha_eq(env.lookup("I"), parse_term("\\x. x"), env));
  CHECK(alpha_eq(env.lookup("THETA"), parse_term("(\\x y. y (x x y)) (\\x y. y (x x y))"), env));
  CHECK_THROWS_AS(env.define("K", parse_term("\\x y. y")), PreconditionError);   // no shadowing
  CHECK_THROWS_AS(env.define("BAD", parse_term("\\x. y")), PreconditionError);   // must be closed
  CHECK_THROWS_AS(env.define("BAD", ref("MISSING")), std::runtime_error);
  env.define("SELFAPP", parse_term("\\x. x x"));
  CHECK(env.contains("SELFAPP"));
}

TEST_CASE("term parser and printer") {
  // application is left-associative, abstraction extends right
  Term t = parse_term("\\x y. x (y x)");
  CHECK(to_string(t) == "\\x y. x (y x)");
  CHECK(alpha_eq(parse_term("a b c"), app(var("a"), var("b"), var("c"))));
  CHECK(parse_term("_HA")->tag == BotTag::HA);
  CHECK(parse_term("_|_")->tag == BotTag::Plain);
  CHECK(parse_term("THETA K")->left->kind == TermNode::Kind::Ref);
  // λ is accepted as well
  CHECK(alpha_eq(parse_term("λx. x"), parse_term("\\x. x")));
  CHECK_THROWS_AS(parse_term("(\\x. x"), ParseError);
  CHECK_THROWS_AS(parse_term(""), ParseError);
  CHECK_THROWS_AS(parse_term("\\x x"), ParseError);

  testsupport::TermGen gen(20240004);
  for (int i = 0; i < 200; ++i) {
    Term a = gen.term(1 + gen.pick(25));
    CHECK(alpha_eq(parse_term(to_string(a)), a));
  }
}

TEST_CASE("script parsing") {
  auto [env, query] = parse_script("# russell's set\nD = \\p. p p F T\nD D\n");
  CHECK(env.contains("D"));
  CHECK(alpha_eq(query, app(ref("D"), ref("D")), env));
  CHECK_THROWS_AS(parse_script("x y\nz w\n"), ParseError);
}

TEST_CASE("path navigation") {
  Term t = parse_term("(\\x. x) ((\\y. y) a)");
  CHECK(alpha_eq(subterm_at(t, {Step::Arg, Step::Fun}), parse_term("\\y. y")));
  Term replaced = replace_at(t, {Step::Arg}, var("b"));
  CHECK(alpha_eq(replaced, parse_term("(\\x. x) b")));
  CHECK_THROWS_AS(subterm_at(t, {Step::Body}), PreconditionError);
}
