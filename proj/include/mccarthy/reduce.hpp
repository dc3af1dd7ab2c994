// β-reduction: single steps at explicit positions, normal-order and weak-head
// strategies with fuel bounds, cycle detection over canonical forms, traces.
//
// Step counting counts β-contractions only; Ref resolution is free. All
// strategies resolve references up front, so the loops work on pure terms.

#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "term.hpp"

namespace mccarthy {

struct TraceEntry {
  Term term;   // term before the step
  Path redex;  // position of the contracted redex
};

struct Trace {
  std::vector<TraceEntry> steps;
  Term final_term;
};

struct ReduceOutcome {
  enum class Kind { NormalForm, FuelExhausted, CycleDetected };
  Kind kind;
  Term term;        // normal form / last term / cycle witness
  long long steps = 0;
  long long loop_length = 0;  // CycleDetected only

  bool is_normal_form() const { return kind == Kind::NormalForm; }
};

inline bool is_redex(const Term& t) {
  return t->kind == TermNode::Kind::App && t->left->kind == TermNode::Kind::Lam;
}

// Leftmost-outermost redex position, if any. Expects a Ref-free term.
inline bool find_redex_normal_order(const Term& t, Path& out) {
  if (is_redex(t)) return true;
  switch (t->kind) {
    case TermNode::Kind::Lam:
      out.push_back(Step::Body);
      if (find_redex_normal_order(t->left, out)) return true;
      out.pop_back();
      return false;
    case TermNode::Kind::App:
      out.push_back(Step::Fun);
      if (find_redex_normal_order(t->left, out)) return true;
      out.back() = Step::Arg;
      if (find_redex_normal_order(t->right, out)) return true;
      out.pop_back();
      return false;
    default:
      return false;
  }
}

inline Term contract(const Term& redex) {
  return substitute(redex->left->left, redex->left->name, redex->right);
}

// Contract the redex at `pos`; everything else is unchanged.
inline Term beta_step_at(const Term& t, const Path& pos, const DefEnv& env = DefEnv::standard()) {
  Term whole = resolve_refs(t, env);
  Term sub = subterm_at(whole, pos);
  if (!is_redex(sub)) throw PreconditionError("no redex at given position: " + to_string(sub));
  return replace_at(whole, pos, contract(sub));
}

// Normal-order (leftmost-outermost) normalization. Detects nontermination by
// revisiting an α-equivalent term; since the strategy is deterministic this
// is a proof of divergence. The visited set is local to the call.
inline ReduceOutcome normalize(const Term& t, const DefEnv& env = DefEnv::standard(),
                               long long fuel = 10000, Trace* trace = nullptr) {
  Term cur = resolve_refs(t, env);
  std::unordered_map<std::string, long long> visited;
  visited.emplace(canon_key(cur), 0);
  long long steps = 0;
  while (true) {
    Path pos;
    if (!find_redex_normal_order(cur, pos)) {
      if (trace) trace->final_term = cur;
      return {ReduceOutcome::Kind::NormalForm, cur, steps, 0};
    }
    if (steps >= fuel) {
      if (trace) trace->final_term = cur;
      return {ReduceOutcome::Kind::FuelExhausted, cur, steps, 0};
    }
    if (trace) trace->steps.push_back({cur, pos});
    cur = replace_at(cur, pos, contract(subterm_at(cur, pos)));
    ++steps;
    auto [it, fresh] = visited.emplace(canon_key(cur), steps);
    if (!fresh) {
      if (trace) trace->final_term = cur;
      return {ReduceOutcome::Kind::CycleDetected, cur, steps, steps - it->second};
    }
  }
}

namespace detail {
// Spine decomposition of an application chain: t = head · args[0] · args[1] ...
inline Term spine_head(const Term& t, std::vector<Term>& args) {
  Term cur = t;
  while (cur->kind == TermNode::Kind::App) {
    args.push_back(cur->right);
    cur = cur->left;
  }
  std::reverse(args.begin(), args.end());
  return cur;
}

inline Term spine_rebuild(Term head, const std::vector<Term>& args, size_t count) {
  for (size_t i = 0; i < count; ++i) head = app(head, args[i]);
  return head;
}

// Innermost redex on the spine: with spine λ-head and m args, contract
// (head · args[0]). Returns nullopt when the term is in weak head normal form.
inline std::optional<Term> spine_step(const Term& t) {
  std::vector<Term> args;
  Term head = spine_head(t, args);
  if (head->kind != TermNode::Kind::Lam || args.empty()) return std::nullopt;
  Term contracted = substitute(head->left, head->name, args[0]);
  Term rebuilt = contracted;
  for (size_t i = 1; i < args.size(); ++i) rebuilt = app(rebuilt, args[i]);
  return rebuilt;
}
}  // namespace detail

// Weak-head search: reduce only the outermost spine until the term is an
// abstraction or a variable/constant-headed application.
inline ReduceOutcome whnf_search(const Term& t, const DefEnv& env = DefEnv::standard(),
                                 long long fuel = 10000) {
  Term cur = resolve_refs(t, env);
  std::unordered_map<std::string, long long> visited;
  visited.emplace(canon_key(cur), 0);
  long long steps = 0;
  while (true) {
    auto next = detail::spine_step(cur);
    if (!next) return {ReduceOutcome::Kind::NormalForm, cur, steps, 0};
    if (steps >= fuel) return {ReduceOutcome::Kind::FuelExhausted, cur, steps, 0};
    cur = *next;
    ++steps;
    auto [it, fresh] = visited.emplace(canon_key(cur), steps);
    if (!fresh) return {ReduceOutcome::Kind::CycleDetected, cur, steps, steps - it->second};
  }
}

// One head reduction step: in λx1…xn.(λx.P)Q M_m…M_1 contract (λx.P)Q.
// Returns nullopt when the term is in head normal form.
inline std::optional<Term> head_step(const Term& t, const DefEnv& env = DefEnv::standard()) {
  Term cur = resolve_refs(t, env);
  if (cur->kind == TermNode::Kind::Lam) {
    auto inner = head_step(cur->left, env);
    if (!inner) return std::nullopt;
    return lam(cur->name, *inner);
  }
  return detail::spine_step(cur);
}

// --- rendering --------------------------------------------------------------

inline std::string render_trace(const Trace& trace) {
  std::string out;
  for (const auto& entry : trace.steps) {
    out += to_string(entry.term, &entry.redex);
    out += '\n';
  }
  if (trace.final_term) {
    out += to_string(trace.final_term);
    out += '\n';
  }
  return out;
}

inline const char* outcome_name(ReduceOutcome::Kind k) {
  switch (k) {
    case ReduceOutcome::Kind::NormalForm: return "normal-form";
    case ReduceOutcome::Kind::FuelExhausted: return "fuel-exhausted";
    case ReduceOutcome::Kind::CycleDetected: return "cycle-detected";
  }
  return "?";
}

}  // namespace mccarthy
