#include "doctest.h"

#include "mccarthy/golden.hpp"
#include "mccarthy/logic.hpp"
#include "mccarthy/parser.hpp"

using namespace mccarthy;

namespace {
Term theta_of(const char* body) { return app(ref("THETA"), parse_term(body)); }
}  // namespace

TEST_CASE("encodings") {
  CHECK(alpha_eq(encode_value(Tv::T, Style::Church), parse_term("\\x y. x")));
  CHECK(alpha_eq(encode_value(Tv::BotO, Style::Church), parse_term("THETA K")));
  CHECK(alpha_eq(encode_value(Tv::F, Style::LambdaI), parse_term("\\x. x I I I")));
  CHECK(alpha_eq(encode_value(Tv::T, Style::LambdaI), parse_term("\\x y. y I I x")));
  CHECK(alpha_eq(encode_value(Tv::Bot, Style::Church), ref("OMEGA")));
}

TEST_CASE("connectives are syntactic applications") {
  Term m = var("m"), n = var("n");
  CHECK(alpha_eq(neg(m), parse_term("m F T")));
  CHECK(alpha_eq(conj(m, n), parse_term("m n m")));
  CHECK(alpha_eq(disj(m, n), parse_term("m m n")));
  CHECK(alpha_eq(impl(m, n), parse_term("m n T")));
  CHECK(alpha_eq(ite(var("b"), m, n), parse_term("b m n")));

  // if-then-else behaves as intended
  Term t = encode_value(Tv::T), f = encode_value(Tv::F);
  CHECK(alpha_eq(normalize(ite(t, m, n)).term, m));
  CHECK(alpha_eq(normalize(ite(f, m, n)).term, n));
  CHECK(alpha_eq(normalize(disj(f, disj(t, f))).term, t));
}

TEST_CASE("decoding closed terms") {
  CHECK(decode(parse_term("T T F"), 2) == decode_value(Tv::T));
  CHECK(decode(parse_term("T T F"), 3) == decode_value(Tv::T));

  // φ1 ≡ Θ(λX. T X T), the infinite conjunction T ∧ (T ∧ …), is root-active
  Term phi1 = theta_of("\\X. T X T");
  CHECK(decode(phi1, 3) == decode_value(Tv::Bot));
  CHECK(decode(phi1, 5) == decode_value(Tv::BotHA));

  // φ2 ≡ Θ(λX. T T X), the infinite disjunction, reduces to T
  Term phi2 = theta_of("\\X. T T X");
  CHECK(decode(phi2, 3) == decode_value(Tv::T));
  CHECK(decode(phi2, 5) == decode_value(Tv::T));

  CHECK(decode(ref("OMEGA"), 4) == decode_value(Tv::BotHA));
  CHECK(decode(parse_term("THETA K"), 5) == decode_value(Tv::BotO));
  CHECK(decode(parse_term("THETA K"), 4) == decode_value(Tv::BotD));

  // arity 2 rejects proved unsolvables
  CHECK_THROWS_AS(decode(ref("OMEGA"), 2), DecodeError);
  // solvable non-Booleans are not truth values
  CHECK_THROWS_AS(decode(ref("I"), 3), DecodeError);
  // open terms are rejected
  CHECK_THROWS_AS(decode(var("x"), 3), PreconditionError);
  // undecided inputs propagate Unknown rather than erroring
  CHECK(decode(theta_of("\\x. x I"), 3, Style::Church, DefEnv::standard(), 2).kind ==
        DecodeResult::Kind::Unknown);
}

TEST_CASE("decoding ⊥ constants") {
  CHECK(decode(bot(BotTag::Plain), 3) == decode_value(Tv::Bot));
  CHECK(decode(bot(BotTag::HA), 5) == decode_value(Tv::BotHA));
  CHECK(decode(bot(BotTag::IL), 4) == decode_value(Tv::BotD));
  CHECK(decode(bot(BotTag::D), 4) == decode_value(Tv::BotD));
  CHECK_THROWS_AS(decode(bot(BotTag::Plain), 4), DecodeError);
  CHECK_THROWS_AS(decode(bot(BotTag::D), 5), DecodeError);
  CHECK_THROWS_AS(decode(bot(BotTag::HA), 2), DecodeError);
}

TEST_CASE("truth table spot checks") {
  TruthTable conj3 = truth_table(Connective::Conj, 3);
  CHECK(conj3.at({Tv::Bot, Tv::T}) == Tv::Bot);
  CHECK(conj3.at({Tv::Bot, Tv::F}) == Tv::Bot);
  CHECK(conj3.at({Tv::Bot, Tv::Bot}) == Tv::Bot);
  CHECK(conj3.at({Tv::F, Tv::Bot}) == Tv::F);

  TruthTable disj5 = truth_table(Connective::Disj, 5);
  CHECK(disj5.at({Tv::F, Tv::BotIL}) == Tv::BotIL);

  TruthTable neg4 = truth_table(Connective::Neg, 4);
  CHECK(neg4.at({Tv::BotD}) == Tv::BotD);

  TruthTable impl3 = truth_table(Connective::Impl, 3);
  CHECK(impl3.at({Tv::F, Tv::Bot}) == Tv::T);
}

TEST_CASE("computed tables match the published figures") {
  for (const GoldenTable& g : golden::tables()) {
    TruthTable computed = truth_table(g.connective, g.arity);
    auto mismatches = golden::compare(computed);
    for (const auto& m : mismatches) FAIL_CHECK(m);
    CHECK(mismatches.empty());
  }
  // the flagged four-valued cell decodes to ⊥D, not the printed ⊥IL
  const auto& note = golden::flagged_typo_cell();
  TruthTable conj4 = truth_table(note.connective, note.arity);
  CHECK(conj4.cells.at(note.args) == Tv::BotD);
}

TEST_CASE("left-sequentiality: ⊥-class rows are constant") {
  for (int arity : {3, 4, 5}) {
    for (Connective c : {Connective::Conj, Connective::Disj}) {
      TruthTable t = truth_table(c, arity);
      for (Tv row : tv_domain(arity)) {
        if (row == Tv::T || row == Tv::F) continue;
        for (Tv col : tv_domain(arity)) CHECK(t.at({row, col}) == row);
      }
    }
  }
}

TEST_CASE("projection coherence") {
  for (Connective c : {Connective::Neg, Connective::Conj, Connective::Disj, Connective::Impl}) {
    TruthTable t5 = truth_table(c, 5);
    TruthTable t4 = truth_table(c, 4);
    TruthTable t3 = truth_table(c, 3);
    TruthTable t2 = truth_table(c, 2);
    CHECK(project_table(t5, 4).cells == t4.cells);
    CHECK(project_table(t5, 3).cells == t3.cells);
    CHECK(project_table(t4, 3).cells == t3.cells);
    // projections commute: 5→4→3 = 5→3
    CHECK(project_table(project_table(t5, 4), 3).cells == project_table(t5, 3).cells);
    // the {T,F} sub-table of arity 3 is the two-valued table
    for (const auto& [args, v] : t2.cells) CHECK(t3.cells.at(args) == v);
  }
}

TEST_CASE("Church and λI styles agree wherever λI can realize the short-circuit") {
  // At arity 2 the styles agree everywhere. At arity 3 the λI booleans cannot
  // discard the untaken branch (no erasure in the λI-calculus), so the three
  // cells whose short-circuit drops a divergent branch necessarily trap it:
  // F ∧ ⊥, T ∨ ⊥ and F → ⊥ decode to ⊥ instead of the Boolean. Every other
  // cell, including all ⊥-first rows, agrees with the Church tables.
  for (Connective c : {Connective::Neg, Connective::Conj, Connective::Disj, Connective::Impl}) {
    TruthTable church2 = truth_table(c, 2, Style::Church);
    TruthTable lambda2 = truth_table(c, 2, Style::LambdaI);
    CHECK(church2.cells == lambda2.cells);

    TruthTable church3 = truth_table(c, 3, Style::Church);
    TruthTable lambda3 = truth_table(c, 3, Style::LambdaI);
    for (const auto& [args, v] : church3.cells) {
      bool discarded_divergent_branch =
          (c == Connective::Conj && args == std::vector<Tv>{Tv::F, Tv::Bot}) ||
          (c == Connective::Disj && args == std::vector<Tv>{Tv::T, Tv::Bot}) ||
          (c == Connective::Impl && args == std::vector<Tv>{Tv::F, Tv::Bot});
      if (discarded_divergent_branch)
        CHECK(lambda3.cells.at(args) == Tv::Bot);
      else
        CHECK(lambda3.cells.at(args) == v);
    }
  }
  // the witness reduction: T_I ∨ ⊥ ≡ T_I T_I Ω ↠ Ω I I T_I, which is unsolvable
  Term trapped = disj(encode_value(Tv::T, Style::LambdaI), encode_value(Tv::Bot, Style::LambdaI));
  CHECK(is_solvable(trapped).kind == Solvability::Kind::No);
}

TEST_CASE("implication agrees with ¬x ∨ y at arities 4 and 5") {
  for (int arity : {4, 5}) {
    TruthTable im = truth_table(Connective::Impl, arity);
    for (Tv a : tv_domain(arity))
      for (Tv b : tv_domain(arity)) {
        DecodeResult viaDisj =
            decode(disj(neg(encode_value(a)), encode_value(b)), arity);
        REQUIRE(viaDisj.is_value());
        CHECK(im.at({a, b}) == viaDisj.value);
      }
  }
}

TEST_CASE("if-then-else decomposition over all 27 triples") {
  IteDecompositionReport report = check_ite_decomposition();
  CHECK(report.entries.size() == 27);
  CHECK(report.all_agree);
  for (const auto& e : report.entries) CHECK(e.lhs == e.rhs);
  // spot values derived by direct table evaluation
  auto find = [&](Tv a, Tv b, Tv c) {
    for (const auto& e : report.entries)
      if (e.b0 == a && e.b1 == b && e.b2 == c) return e.lhs;
    FAIL("triple missing");
    return Tv::Bot;
  };
  CHECK(find(Tv::T, Tv::F, Tv::T) == Tv::F);
  CHECK(find(Tv::Bot, Tv::T, Tv::T) == Tv::Bot);
  CHECK(find(Tv::F, Tv::T, Tv::F) == Tv::F);
}

TEST_CASE("unsolvability is preserved by the connectives") {
  Term u = encode_value(Tv::Bot);  // Ω
  for (const Term& t : {neg(u), conj(u, ref("T")), disj(u, ref("F")), impl(u, ref("T"))}) {
    CHECK(is_solvable(t).kind == Solvability::Kind::No);
    CHECK(decode(t, 3) == decode_value(Tv::Bot));
  }
}

TEST_CASE("table rendering stays aligned") {
  std::string s = render_table(truth_table(Connective::Conj, 3));
  CHECK(s.find("∧") != std::string::npos);
  CHECK(s.find("⊥") != std::string::npos);
}
