#include "doctest.h"

#include <random>

#include "mccarthy/parser.hpp"
#include "mccarthy/prop.hpp"

using namespace mccarthy;

namespace {

// Deterministic generator of closed finite propositions.
struct PropGen {
  std::mt19937 rng;
  bool allow_bot;
  explicit PropGen(unsigned seed, bool bot) : rng(seed), allow_bot(bot) {}

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  Prop gen(int depth) {
    if (depth <= 0 || pick(4) == 0) {
      int n = allow_bot ? 3 : 2;
      switch (pick(n)) {
        case 0: return pconst(Tv::T);
        case 1: return pconst(Tv::F);
        default: return pconst(Tv::Bot);
      }
    }
    switch (pick(5)) {
      case 0: return pnot(gen(depth - 1));
      case 1: return pand(gen(depth - 1), gen(depth - 1));
      case 2: return por(gen(depth - 1), gen(depth - 1));
      case 3: return pimplies(gen(depth - 1), gen(depth - 1));
      default: return pite(gen(depth - 1), gen(depth - 1), gen(depth - 1));
    }
  }
};

}  // namespace

TEST_CASE("proposition parsing") {
  ParsedProp p = parse_prop("F \\/ (T \\/ F)");
  CHECK(p.main == por(pconst(Tv::F), por(pconst(Tv::T), pconst(Tv::F))));
  CHECK(p.recs.empty());

  ParsedProp phi1 = parse_prop("rec X = T /\\ X in X");
  CHECK(phi1.main == precref("X"));
  CHECK(phi1.recs.at("X") == pand(pconst(Tv::T), precref("X")));

  ParsedProp w = parse_prop("rec W = if a then T else (if b then W else W) in W");
  CHECK(w.recs.at("W") ==
        pite(pvar("a"), pconst(Tv::T), pite(pvar("b"), precref("W"), precref("W"))));

  // precedence: ~ binds tighter than /\ than \/ than ->; left associativity
  CHECK(parse_prop("~a /\\ b \\/ c -> d").main ==
        pimplies(por(pand(pnot(pvar("a")), pvar("b")), pvar("c")), pvar("d")));
  CHECK(parse_prop("a -> b -> c").main == pimplies(pimplies(pvar("a"), pvar("b")), pvar("c")));
  CHECK(parse_prop("_HA /\\ _D").main == pand(pconst(Tv::BotHA), pconst(Tv::BotD)));

  CHECK_THROWS_AS(parse_prop("a /\\"), ParseError);
  CHECK_THROWS_AS(parse_prop("rec X = X in"), ParseError);
  CHECK_THROWS_AS(parse_prop("rec X = T in rec X = F in X"), ParseError);
  CHECK_THROWS_AS(parse_prop("if a then b"), ParseError);
}

TEST_CASE("compilation to closed λ-terms") {
  // φ2 ≡ T ∨ φ2 compiles to Θ(λX. T T X)
  ParsedProp phi2 = parse_prop("rec X = T \\/ X in X");
  Term compiled = compile_prop(phi2.main, phi2.recs);
  CHECK(alpha_eq(compiled, app(ref("THETA"), parse_term("\\X. T T X"))));

  // φ1 ≡ T ∧ φ1 compiles to Θ(λX. T X T)
  ParsedProp phi1 = parse_prop("rec X = T /\\ X in X");
  CHECK(alpha_eq(compile_prop(phi1.main, phi1.recs), app(ref("THETA"), parse_term("\\X. T X T"))));

  // the ¬-loop compiles to Θ(λX. X F T)
  ParsedProp loop = parse_prop("rec X = ~X in X");
  CHECK(alpha_eq(compile_prop(loop.main, loop.recs), app(ref("THETA"), parse_term("\\X. X F T"))));

  // variables compile through the assignment
  ParsedProp w = parse_prop("a /\\ b");
  CHECK(alpha_eq(compile_prop(w.main, {}, {{"a", Tv::T}, {"b", Tv::F}}), parse_term("T F T")));
  CHECK_THROWS_AS(compile_prop(w.main, {}, {{"a", Tv::T}}), PreconditionError);
}

TEST_CASE("compile is total on closed propositions and yields closed terms") {
  PropGen gen(20240021, true);
  for (int i = 0; i < 300; ++i) {
    Prop p = gen.gen(6);
    Term t = compile_prop(p);
    CHECK(free_vars(resolve_refs(t, DefEnv::standard())).empty());
  }
}

TEST_CASE("rational propositions evaluate like the worked examples") {
  ParsedProp phi1 = parse_prop("rec X = T /\\ X in X");
  CHECK(eval_prop(phi1.main, phi1.recs) == decode_value(Tv::Bot));
  CHECK(eval_prop(phi1.main, phi1.recs, {}, 5) == decode_value(Tv::BotHA));

  ParsedProp phi2 = parse_prop("rec X = T \\/ X in X");
  CHECK(eval_prop(phi2.main, phi2.recs) == decode_value(Tv::T));

  ParsedProp loop = parse_prop("rec X = ~X in X");
  CHECK(eval_prop(loop.main, loop.recs) == decode_value(Tv::Bot));
  CHECK(eval_prop(loop.main, loop.recs, {}, 5) == decode_value(Tv::BotIL));
}

TEST_CASE("direct evaluation") {
  ParsedProp p = parse_prop("F \\/ (T \\/ F)");
  CHECK(direct_eval(p.main) == Tv::T);

  ParsedProp phi1 = parse_prop("rec X = T /\\ X in X");
  CHECK(direct_eval(phi1.main, phi1.recs) == Tv::Bot);

  ParsedProp w = parse_prop("rec W = if a then T else (if b then W else W) in W");
  CHECK(direct_eval(w.main, w.recs, {{"a", Tv::T}, {"b", Tv::F}}) == Tv::T);
  CHECK(direct_eval(w.main, w.recs, {{"a", Tv::F}, {"b", Tv::T}}) == Tv::Bot);
  CHECK(direct_eval(w.main, w.recs, {{"a", Tv::Bot}, {"b", Tv::T}}) == Tv::Bot);

  // left-sequentiality: ⊥ on the left wins, a settled left ignores the right
  CHECK(direct_eval(parse_prop("_|_ /\\ T").main) == Tv::Bot);
  CHECK(direct_eval(parse_prop("F /\\ _|_").main) == Tv::F);
  CHECK(direct_eval(parse_prop("T \\/ _|_").main) == Tv::T);
}

TEST_CASE("oracle equivalence on random finite propositions") {
  // Boolean constants only: evaluation must produce a Boolean
  PropGen boolean_gen(20240022, false);
  for (int i = 0; i < 300; ++i) {
    Prop p = boolean_gen.gen(8);
    Tv direct = direct_eval(p);
    CHECK((direct == Tv::T || direct == Tv::F));
    DecodeResult lambda = eval_prop(p);
    REQUIRE(lambda.is_value());
    CHECK(lambda.value == direct);
  }
  // with ⊥ constants allowed
  PropGen bot_gen(20240023, true);
  for (int i = 0; i < 300; ++i) {
    Prop p = bot_gen.gen(8);
    DecodeResult lambda = eval_prop(p);
    REQUIRE(lambda.is_value());
    CHECK(lambda.value == direct_eval(p));
  }
}

TEST_CASE("oracle equivalence on the rational corpus") {
  const char* corpus[] = {"rec X = T /\\ X in X", "rec X = T \\/ X in X", "rec X = ~X in X"};
  for (const char* text : corpus) {
    ParsedProp p = parse_prop(text);
    DecodeResult lambda = eval_prop(p.main, p.recs);
    REQUIRE(lambda.is_value());
    CHECK(lambda.value == direct_eval(p.main, p.recs));
  }
  ParsedProp w = parse_prop("rec W = if a then T else (if b then W else W) in W");
  for (Tv a : tv_domain(3))
    for (Tv b : tv_domain(3)) {
      Assignment assignment{{"a", a}, {"b", b}};
      DecodeResult lambda = eval_prop(w.main, w.recs, assignment);
      REQUIRE(lambda.is_value());
      CHECK(lambda.value == direct_eval(w.main, w.recs, assignment));
    }
}

TEST_CASE("russell demo") {
  RussellReport report = russell_demo();
  REQUIRE(report.trace.size() == 3);
  // P → ¬P → ¬¬P → ¬¬¬P, each step annotated
  for (const auto& line : report.trace) CHECK(line.find("P") != std::string::npos);
  CHECK(report.verdict.unsolvable(UnsolvableClass::IL));
  CHECK(report.value == Tv::Bot);
  std::string rendered = render_russell(report);
  CHECK(rendered.find("Unsolvable(IL)") != std::string::npos);
  CHECK(rendered.find("⊥") != std::string::npos);
}
