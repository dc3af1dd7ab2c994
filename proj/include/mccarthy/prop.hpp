// Proposition language: finite propositions plus rational-infinite ones given
// by recursive bindings. Propositions compile to closed λ-terms (recursion
// through Θ) and evaluate through the engine; direct_eval is an independent
// short-circuit interpreter used as an oracle, with no λ-terms involved.

#pragma once

#include <cctype>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "logic.hpp"
#include "term.hpp"

namespace mccarthy {

struct Prop {
  enum class Kind { Var, Const, Not, And, Or, Implies, Ite, RecRef };
  Kind kind;
  std::string name;  // Var / RecRef
  Tv value = Tv::Bot;  // Const
  std::vector<Prop> kids;

  bool operator==(const Prop&) const = default;
};

inline Prop pvar(std::string n) { return {Prop::Kind::Var, std::move(n), Tv::Bot, {}}; }
inline Prop pconst(Tv v) { return {Prop::Kind::Const, "", v, {}}; }
inline Prop pnot(Prop p) { return {Prop::Kind::Not, "", Tv::Bot, {std::move(p)}}; }
inline Prop pand(Prop a, Prop b) { return {Prop::Kind::And, "", Tv::Bot, {std::move(a), std::move(b)}}; }
inline Prop por(Prop a, Prop b) { return {Prop::Kind::Or, "", Tv::Bot, {std::move(a), std::move(b)}}; }
inline Prop pimplies(Prop a, Prop b) { return {Prop::Kind::Implies, "", Tv::Bot, {std::move(a), std::move(b)}}; }
inline Prop pite(Prop c, Prop t, Prop e) { return {Prop::Kind::Ite, "", Tv::Bot, {std::move(c), std::move(t), std::move(e)}}; }
inline Prop precref(std::string n) { return {Prop::Kind::RecRef, std::move(n), Tv::Bot, {}}; }

// Recursive bindings: name → body. Bodies may reference any bound name,
// including their own; the dependency graph may be cyclic.
using RecEnv = std::map<std::string, Prop>;

using Assignment = std::map<std::string, Tv>;

struct ParsedProp {
  Prop main;
  RecEnv recs;
};

// --- parser -------------------------------------------------------------------
//
//   prop    := impl
//   impl    := or ('->' or)*            left-associative
//   or      := and ('\/' and)*
//   and     := unary ('/\' unary)*
//   unary   := '~' unary | atom
//   atom    := 'T' | 'F' | '_|_' | '_HA' | '_IL' | '_O' | '_D'
//            | 'if' prop 'then' prop 'else' prop
//            | 'rec' NAME '=' prop 'in' prop
//            | identifier | '(' prop ')'

namespace detail {

class PropParser {
 public:
  explicit PropParser(std::string_view text) : text_(text) {}

  ParsedProp parse() {
    Prop p = parse_impl();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input in proposition", pos_);
    return {std::move(p), std::move(recs_)};
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) != tok) return false;
    // keywords must not swallow identifier prefixes
    if (std::isalpha(static_cast<unsigned char>(tok[0]))) {
      size_t end = pos_ + tok.size();
      if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        return false;
    }
    pos_ += tok.size();
    return true;
  }

  std::string parse_name() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected a name", pos_);
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Prop parse_impl() {
    Prop p = parse_or();
    while (eat("->")) p = pimplies(std::move(p), parse_or());
    return p;
  }

  Prop parse_or() {
    Prop p = parse_and();
    while (eat("\\/")) p = por(std::move(p), parse_and());
    return p;
  }

  Prop parse_and() {
    Prop p = parse_unary();
    while (eat("/\\")) p = pand(std::move(p), parse_unary());
    return p;
  }

  Prop parse_unary() {
    if (eat("~")) return pnot(parse_unary());
    return parse_atom();
  }

  Prop parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("expected a proposition", pos_);
    if (eat("(")) {
      Prop p = parse_impl();
      if (!eat(")")) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (eat("_|_")) return pconst(Tv::Bot);
    if (eat("_HA")) return pconst(Tv::BotHA);
    if (eat("_IL")) return pconst(Tv::BotIL);
    if (eat("_O")) return pconst(Tv::BotO);
    if (eat("_D")) return pconst(Tv::BotD);
    if (eat("if")) {
      Prop c = parse_impl();
      if (!eat("then")) throw ParseError("expected 'then'", pos_);
      Prop t = parse_impl();
      if (!eat("else")) throw ParseError("expected 'else'", pos_);
      Prop e = parse_impl();
      return pite(std::move(c), std::move(t), std::move(e));
    }
    if (eat("rec")) {
      std::string name = parse_name();
      if (recs_.count(name)) throw ParseError("recursive name defined twice: " + name, pos_);
      if (!eat("=")) throw ParseError("expected '=' in rec binding", pos_);
      rec_scope_.insert(name);
      recs_.emplace(name, pconst(Tv::Bot));  // placeholder while the body parses
      Prop body = parse_impl();
      recs_[name] = std::move(body);
      if (!eat("in")) throw ParseError("expected 'in' after rec binding", pos_);
      Prop rest = parse_impl();
      rec_scope_.erase(name);
      return rest;
    }
    std::string name = parse_name();
    if (name == "T") return pconst(Tv::T);
    if (name == "F") return pconst(Tv::F);
    if (rec_scope_.count(name) || recs_.count(name)) return precref(name);
    return pvar(name);
  }

  std::string_view text_;
  size_t pos_ = 0;
  RecEnv recs_;
  std::set<std::string> rec_scope_;
};

}  // namespace detail

inline ParsedProp parse_prop(std::string_view text) { return detail::PropParser(text).parse(); }

// --- compilation -----------------------------------------------------------------

namespace detail {
inline Term compile_rec(const Prop& p, const RecEnv& recs, const Assignment& assignment,
                        Style style, std::map<std::string, std::string>& in_scope,
                        std::set<std::string>& used_binders) {
  switch (p.kind) {
    case Prop::Kind::Var: {
      auto it = assignment.find(p.name);
      if (it == assignment.end())
        throw PreconditionError("unbound propositional variable: " + p.name);
      return encode_value(it->second, style);
    }
    case Prop::Kind::Const:
      return encode_value(p.value, style);
    case Prop::Kind::Not:
      return neg(compile_rec(p.kids[0], recs, assignment, style, in_scope, used_binders), style);
    case Prop::Kind::And:
      return conj(compile_rec(p.kids[0], recs, assignment, style, in_scope, used_binders),
                  compile_rec(p.kids[1], recs, assignment, style, in_scope, used_binders));
    case Prop::Kind::Or:
      return disj(compile_rec(p.kids[0], recs, assignment, style, in_scope, used_binders),
                  compile_rec(p.kids[1], recs, assignment, style, in_scope, used_binders));
    case Prop::Kind::Implies:
      return impl(compile_rec(p.kids[0], recs, assignment, style, in_scope, used_binders),
                  compile_rec(p.kids[1], recs, assignment, style, in_scope, used_binders), style);
    case Prop::Kind::Ite:
      return ite(compile_rec(p.kids[0], recs, assignment, style, in_scope, used_binders),
                 compile_rec(p.kids[1], recs, assignment, style, in_scope, used_binders),
                 compile_rec(p.kids[2], recs, assignment, style, in_scope, used_binders));
    case Prop::Kind::RecRef: {
      auto bound = in_scope.find(p.name);
      if (bound != in_scope.end()) return var(bound->second);
      auto body = recs.find(p.name);
      if (body == recs.end()) throw PreconditionError("unbound recursive name: " + p.name);
      // X = body compiles to Θ(λx_X. ⟦body⟧) with X ↦ x_X inside the body;
      // mutual recursion re-enters here for names not already in scope
      std::string binder = fresh_name(p.name, used_binders);
      used_binders.insert(binder);
      in_scope.emplace(p.name, binder);
      Term compiled = compile_rec(body->second, recs, assignment, style, in_scope, used_binders);
      in_scope.erase(p.name);
      return app(ref("THETA"), lam(binder, compiled));
    }
  }
  throw PreconditionError("bad proposition");
}
}  // namespace detail

// Compile to a closed λ-term: propositional variables substitute their
// assigned value's encoding, rec bindings become Θ-fixed points.
inline Term compile_prop(const Prop& p, const RecEnv& recs = {}, const Assignment& assignment = {},
                         Style style = Style::Church) {
  std::map<std::string, std::string> in_scope;
  std::set<std::string> used_binders;
  return detail::compile_rec(p, recs, assignment, style, in_scope, used_binders);
}

inline DecodeResult eval_prop(const Prop& p, const RecEnv& recs = {},
                              const Assignment& assignment = {}, int arity = 3,
                              Style style = Style::Church, const DefEnv& env = DefEnv::standard(),
                              long long fuel = 10000, long long depth = 64) {
  return decode(compile_prop(p, recs, assignment, style), arity, style, env, fuel, depth);
}

// --- direct McCarthy evaluator (the oracle) -----------------------------------------

namespace detail {
inline Tv direct_rec(const Prop& p, const RecEnv& recs, const Assignment& assignment,
                     std::set<std::string>& active) {
  switch (p.kind) {
    case Prop::Kind::Var: {
      auto it = assignment.find(p.name);
      if (it == assignment.end())
        throw PreconditionError("unbound propositional variable: " + p.name);
      auto v = project(it->second, 3);
      if (!v) throw PreconditionError("assignment value outside the three-valued domain");
      return *v;
    }
    case Prop::Kind::Const: {
      auto v = project(p.value, 3);
      if (!v) throw PreconditionError("constant outside the three-valued domain");
      return *v;
    }
    case Prop::Kind::Not: {
      Tv a = direct_rec(p.kids[0], recs, assignment, active);
      return a == Tv::T ? Tv::F : a == Tv::F ? Tv::T : Tv::Bot;
    }
    case Prop::Kind::And: {
      Tv a = direct_rec(p.kids[0], recs, assignment, active);
      if (a == Tv::F) return Tv::F;
      if (a == Tv::Bot) return Tv::Bot;
      return direct_rec(p.kids[1], recs, assignment, active);
    }
    case Prop::Kind::Or: {
      Tv a = direct_rec(p.kids[0], recs, assignment, active);
      if (a == Tv::T) return Tv::T;
      if (a == Tv::Bot) return Tv::Bot;
      return direct_rec(p.kids[1], recs, assignment, active);
    }
    case Prop::Kind::Implies: {
      Tv a = direct_rec(p.kids[0], recs, assignment, active);
      if (a == Tv::F) return Tv::T;
      if (a == Tv::Bot) return Tv::Bot;
      return direct_rec(p.kids[1], recs, assignment, active);
    }
    case Prop::Kind::Ite: {
      Tv c = direct_rec(p.kids[0], recs, assignment, active);
      if (c == Tv::Bot) return Tv::Bot;
      return direct_rec(p.kids[c == Tv::T ? 1 : 2], recs, assignment, active);
    }
    case Prop::Kind::RecRef: {
      // re-entering a definition before it produced a value means the
      // evaluation loops: the value is ⊥
      if (active.count(p.name)) return Tv::Bot;
      auto body = recs.find(p.name);
      if (body == recs.end()) throw PreconditionError("unbound recursive name: " + p.name);
      active.insert(p.name);
      Tv v = direct_rec(body->second, recs, assignment, active);
      active.erase(p.name);
      return v;
    }
  }
  throw PreconditionError("bad proposition");
}
}  // namespace detail

// Left-sequential short-circuit evaluation, three-valued, no λ-terms.
inline Tv direct_eval(const Prop& p, const RecEnv& recs = {}, const Assignment& assignment = {}) {
  std::set<std::string> active;
  return detail::direct_rec(p, recs, assignment, active);
}

// --- Russell's paradox demo -----------------------------------------------------

struct RussellReport {
  Term term;                        // P ≡ (λp.¬(pp))(λp.¬(pp)) with ¬ expanded
  std::vector<std::string> trace;   // first steps, annotated ¬P, ¬¬P, …
  Verdict verdict;
  Tv value = Tv::Bot;               // three-valued reading
};

inline RussellReport russell_demo(const DefEnv& env = DefEnv::standard(), long long fuel = 10000,
                                  int steps = 3) {
  // p p F T is ¬(p p) with ¬ expanded
  Term half = lam("p", app(app(var("p"), var("p")), ref("F"), ref("T")));
  Term p_term = app(half, half);

  RussellReport report;
  report.term = p_term;
  Term cur = resolve_refs(p_term, env);
  Term annotated = p_term;
  for (int i = 1; i <= steps; ++i) {
    Path pos;
    if (!find_redex_normal_order(cur, pos)) break;
    cur = replace_at(cur, pos, contract(subterm_at(cur, pos)));
    annotated = neg(annotated);
    std::string line = to_string(cur);
    if (alpha_eq(cur, annotated, env)) {
      line += "   = ";
      for (int k = 0; k < i; ++k) line += "¬";
      line += "P";
    }
    report.trace.push_back(std::move(line));
  }
  report.verdict = classify(p_term, env, fuel);
  DecodeResult r = decode(p_term, 3, Style::Church, env, fuel);
  if (r.is_value()) report.value = r.value;
  return report;
}

inline std::string render_russell(const RussellReport& report) {
  std::string out;
  out += "P = " + to_string(report.term) + "\n";
  for (size_t i = 0; i < report.trace.size(); ++i)
    out += "  step " + std::to_string(i + 1) + ": " + report.trace[i] + "\n";
  out += "classification: ";
  out += report.verdict.kind == Verdict::Kind::Unsolvable
             ? std::string("Unsolvable(") + class_name(report.verdict.cls) + ")"
             : "not unsolvable?";
  out += "\nthree-valued value: ";
  out += tv_pretty(report.value);
  out += "\nreading: the set R with R ∈ R ↔ R ∉ R denotes ⊥, not a contradiction\n";
  return out;
}

}  // namespace mccarthy
