// λI-calculus support: validation of the binder-occurrence restriction, the
// finite β⊥-normalization that replaces subterms without a finite normal form
// by ⊥, the λI Boolean checks and λI truth tables.
//
// A certificate that a term has no finite normal form is either a reduction
// cycle under the deterministic normal-order strategy or a definite
// unsolvability verdict (sound: an unsolvable term has no head normal form,
// hence no normal form). In the λI-calculus a subterm without a normal form
// already dooms the whole term, so β⊥-normalization collapses the outermost
// certified term.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "classify.hpp"
#include "logic.hpp"
#include "reduce.hpp"
#include "term.hpp"

namespace mccarthy {

struct LambdaIViolation {
  Path path;            // position of the offending abstraction
  std::string binder;   // its binder, not free in the body
};

namespace detail {
inline void validate_rec(const Term& t, Path& path, std::vector<LambdaIViolation>& out) {
  switch (t->kind) {
    case TermNode::Kind::Lam:
      if (!free_vars(t->left).count(t->name)) out.push_back({path, t->name});
      path.push_back(Step::Body);
      validate_rec(t->left, path, out);
      path.pop_back();
      return;
    case TermNode::Kind::App:
      path.push_back(Step::Fun);
      validate_rec(t->left, path, out);
      path.back() = Step::Arg;
      validate_rec(t->right, path, out);
      path.pop_back();
      return;
    default:
      return;
  }
}
}  // namespace detail

// Every abstraction λx.M must have x free in M. References are resolved
// first, so violations hiding inside library combinators are reported too.
inline std::vector<LambdaIViolation> validate_lambda_i(const Term& t,
                                                       const DefEnv& env = DefEnv::standard()) {
  std::vector<LambdaIViolation> out;
  Path path;
  detail::validate_rec(resolve_refs(t, env), path, out);
  return out;
}

// --- β⊥ normalization ----------------------------------------------------------

struct BotNormalizeResult {
  enum class Kind { Done, Unknown };
  Kind kind;
  Term term;            // Done: the finite β⊥-normal form
  long long steps = 0;

  bool done() const { return kind == Kind::Done; }
};

namespace detail {
// A certificate that t has no finite normal form, within the given fuel.
inline bool certified_no_normal_form(const Term& t, const DefEnv& env, long long fuel) {
  ReduceOutcome out = normalize(t, env, fuel);
  if (out.kind == ReduceOutcome::Kind::CycleDetected) return true;
  if (out.kind == ReduceOutcome::Kind::NormalForm) return false;
  Verdict v = classify(t, env, fuel);
  return v.kind == Verdict::Kind::Unsolvable;
}

inline std::optional<Term> bot_normalize_rec(const Term& t, const DefEnv& env, long long fuel,
                                             long long& steps) {
  ReduceOutcome out = normalize(t, env, fuel);
  steps += out.steps;
  if (out.is_normal_form()) return out.term;
  if (out.kind == ReduceOutcome::Kind::CycleDetected) return bot(BotTag::Plain);
  Verdict v = classify(t, env, fuel);
  if (v.kind == Verdict::Kind::Unsolvable) return bot(BotTag::Plain);
  // no whole-term certificate: a certified subterm also suffices, since in
  // the λI-calculus a term whose subterm has no normal form has none either
  Term res = resolve_refs(t, env);
  std::function<bool(const Term&)> any_certified = [&](const Term& s) -> bool {
    if (s->kind == TermNode::Kind::Lam) return any_certified(s->left);
    if (s->kind == TermNode::Kind::App)
      return certified_no_normal_form(s, env, fuel / 4 + 1) || any_certified(s->left) ||
             any_certified(s->right);
    return false;
  };
  if (any_certified(res)) return bot(BotTag::Plain);
  return std::nullopt;
}
}  // namespace detail

// Normal-order normalization under the rule "M reduces to ⊥ whenever M has no
// finite normal form". Inputs are λI-validated first; a violation does not
// abort the run (the certificates are sound for every term) but is reported
// through validate_lambda_i and the CLI.
inline BotNormalizeResult bot_normalize_i(const Term& t, const DefEnv& env = DefEnv::standard(),
                                          long long fuel = 10000) {
  long long steps = 0;
  auto r = detail::bot_normalize_rec(t, env, fuel, steps);
  if (!r) return {BotNormalizeResult::Kind::Unknown, nullptr, steps};
  return {BotNormalizeResult::Kind::Done, *r, steps};
}

// --- λI Boolean checks -----------------------------------------------------------

struct LambdaIIteReport {
  struct Entry {
    std::string description;
    bool ok;
  };
  std::vector<Entry> entries;
  bool all_ok = true;

  void add(std::string what, bool ok) {
    all_ok = all_ok && ok;
    entries.push_back({std::move(what), ok});
  }
};

// Verifies the two reduction laws of the λI Booleans and their completion:
//   if T_I then M else N  reduces to  N I I M
//   if F_I then M else N  reduces to  M I I I N
// and for Boolean M, N the residues collapse: N I I M → M, M I I I N → N.
inline LambdaIIteReport check_lambda_i_ite(const DefEnv& env = DefEnv::standard(),
                                           long long fuel = 10000) {
  LambdaIIteReport report;
  Term ti = ref("T_I"), fi = ref("F_I"), i = ref("I");
  Term m = var("m"), n = var("n");

  // open reductions: the shapes hold for arbitrary M, N
  Term lhs_t = normalize(ite(ti, m, n), env, fuel).term;
  report.add("if T_I then m else n ~> n I I m", alpha_eq(lhs_t, app(n, i, i, m), env));
  Term lhs_f = normalize(ite(fi, m, n), env, fuel).term;
  report.add("if F_I then m else n ~> m I I I n", alpha_eq(lhs_f, app(app(m, i, i, i), n), env));

  for (const Term& b1 : {ti, fi})
    for (const Term& b2 : {ti, fi}) {
      auto nm = [&](const Term& b) { return alpha_eq(b, ti, env) ? "T_I" : "F_I"; };
      Term completed = normalize(app(b2, i, i, b1), env, fuel).term;
      report.add(std::string(nm(b2)) + " I I " + nm(b1) + " ~> " + nm(b1),
                 alpha_eq(completed, b1, env));
      Term completed_f = normalize(app(app(b1, i, i, i), b2), env, fuel).term;
      report.add(std::string(nm(b1)) + " I I I " + nm(b2) + " ~> " + nm(b2),
                 alpha_eq(completed_f, b2, env));
      Term via_ite = normalize(ite(ti, b1, b2), env, fuel).term;
      report.add(std::string("if T_I then ") + nm(b1) + " else " + nm(b2) + " ~> " + nm(b1),
                 alpha_eq(via_ite, b1, env));
      Term via_ite_f = normalize(ite(fi, b1, b2), env, fuel).term;
      report.add(std::string("if F_I then ") + nm(b1) + " else " + nm(b2) + " ~> " + nm(b2),
                 alpha_eq(via_ite_f, b2, env));
    }
  return report;
}

// Truth tables computed with the λI Booleans.
inline TruthTable truth_table_i(Connective c, int arity = 3, const DefEnv& env = DefEnv::standard(),
                                long long fuel = 10000) {
  return truth_table(c, arity, Style::LambdaI, env, fuel);
}

}  // namespace mccarthy
