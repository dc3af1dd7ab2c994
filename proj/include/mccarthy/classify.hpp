// Bounded semi-decision of solvability and of the partition of unsolvable
// terms into HA (head active), IL (infinite left spine) and O (infinite
// abstraction emission), with replayable cycle certificates.
//
// The engine performs weak-head reduction recursively along the left spine.
// Every contraction at a given recursion level is a root contraction of that
// level's subproblem, so
//   - a state recurring within one level proves the subproblem root-active
//     (at the top level: the whole term is root-active, otherwise the term
//     has a root-stable spine with a root-active head: HA);
//   - a state recurring as the *entry* of a deeper level proves the spine
//     grows forever: the earlier state reduces to itself applied to more
//     arguments (IL);
//   - a weak head normal form that keeps emitting binders whose stripped
//     bodies recur proves an infinite λ-stream (O).
// Definite answers always carry such a certificate; growth without a cycle
// yields Unknown.

#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "reduce.hpp"
#include "term.hpp"

namespace mccarthy {

enum class UnsolvableClass { HA, IL, O };

inline const char* class_name(UnsolvableClass c) {
  switch (c) {
    case UnsolvableClass::HA: return "HA";
    case UnsolvableClass::IL: return "IL";
    case UnsolvableClass::O: return "O";
  }
  return "?";
}

// Replayable certificate: re-running the recorded strategy from the witness
// reproduces the witness (or its recurrence as a spine prefix) within
// loop_length contractions.
struct Evidence {
  enum class Strategy { RootLoop, SpineGrowth, BinderLoop, BotConst };
  Strategy strategy = Strategy::RootLoop;
  Term witness;
  long long loop_length = 0;
  Path path;  // observation path from the root to the certified unit
};

inline const char* strategy_name(Evidence::Strategy s) {
  switch (s) {
    case Evidence::Strategy::RootLoop: return "root-loop";
    case Evidence::Strategy::SpineGrowth: return "spine-growth";
    case Evidence::Strategy::BinderLoop: return "binder-loop";
    case Evidence::Strategy::BotConst: return "bot-constant";
  }
  return "?";
}

struct HeadForm {
  std::vector<std::string> binders;
  std::string head;
  std::vector<Term> args;
};

struct Verdict {
  enum class Kind { Solvable, Unsolvable, Unknown };
  enum class Reason { FuelExhausted, DepthExhausted };

  Kind kind;
  // Solvable: the head normal form λ binders . head arg_1 … arg_m reached
  std::vector<std::string> binders;
  std::string head;
  long long arg_count = 0;
  // Unsolvable
  UnsolvableClass cls = UnsolvableClass::HA;
  Evidence evidence;
  // Unknown
  Reason reason = Reason::FuelExhausted;
  long long steps = 0;

  bool is(Kind k) const { return kind == k; }
  bool unsolvable(UnsolvableClass c) const { return kind == Kind::Unsolvable && cls == c; }
};

namespace detail {

struct Budget {
  long long remaining;
  long long spent = 0;
  bool spend() {
    if (remaining <= 0) return false;
    --remaining;
    ++spent;
    return true;
  }
};

using LocalMap = std::unordered_map<std::string, long long>;

struct SpineResult {
  enum class Kind { Whnf, Diverges, ConstHead, OutOfFuel };
  Kind kind;
  Term term;  // whnf / real state at detection / const-headed spine
  UnsolvableClass cls = UnsolvableClass::HA;
  Evidence evidence;
  bool root_level = false;  // Diverges(HA) detected at recursion depth 0
  BotTag tag = BotTag::Plain;
};

constexpr int kMaxSpineDepth = 20000;

// Weak-head reduce t, classifying divergence. `ancestors` holds the visited
// maps of every enclosing spine level (for the IL prefix-recurrence check).
inline SpineResult spine_whnf(Term cur, Budget& fuel, std::vector<const LocalMap*>& ancestors,
                              const DefEnv& env, int depth) {
  if (depth > kMaxSpineDepth)
    return {SpineResult::Kind::OutOfFuel, cur, UnsolvableClass::HA, {}, false, BotTag::Plain};

  while (cur->kind == TermNode::Kind::Ref) cur = env.lookup(cur->name);

  LocalMap local;
  std::string entry_key = canon_key(cur);
  // entry check: this subproblem equals an enclosing level's earlier state,
  // i.e. that state reduces to itself applied to at least one more argument
  for (const LocalMap* anc : ancestors) {
    auto hit = anc->find(entry_key);
    if (hit != anc->end()) {
      Evidence ev{Evidence::Strategy::SpineGrowth, cur, fuel.spent - hit->second, {}};
      return {SpineResult::Kind::Diverges, cur, UnsolvableClass::IL, ev, false, BotTag::Plain};
    }
  }
  local.emplace(std::move(entry_key), fuel.spent);

  while (true) {
    switch (cur->kind) {
      case TermNode::Kind::Ref:
        cur = env.lookup(cur->name);
        continue;
      case TermNode::Kind::Lam:
      case TermNode::Kind::Var:
        return {SpineResult::Kind::Whnf, cur, UnsolvableClass::HA, {}, false, BotTag::Plain};
      case TermNode::Kind::Const:
        return {SpineResult::Kind::ConstHead, cur, UnsolvableClass::HA, {}, false, cur->tag};
      case TermNode::Kind::App: {
        Term fun = cur->left;
        Term arg = cur->right;
        ancestors.push_back(&local);
        SpineResult sub = spine_whnf(fun, fuel, ancestors, env, depth + 1);
        ancestors.pop_back();
        switch (sub.kind) {
          case SpineResult::Kind::OutOfFuel:
            return sub;
          case SpineResult::Kind::ConstHead:
            return {SpineResult::Kind::ConstHead, app(sub.term, arg), UnsolvableClass::HA, {}, false, sub.tag};
          case SpineResult::Kind::Diverges:
            sub.term = app(sub.term, arg);
            sub.root_level = false;
            sub.evidence.path.insert(sub.evidence.path.begin(), Step::Fun);
            return sub;
          case SpineResult::Kind::Whnf: {
            if (sub.term->kind != TermNode::Kind::Lam) {
              // variable-headed spine: weak head normal form
              return {SpineResult::Kind::Whnf, app(sub.term, arg), UnsolvableClass::HA, {}, false, BotTag::Plain};
            }
            if (!fuel.spend())
              return {SpineResult::Kind::OutOfFuel, app(sub.term, arg), UnsolvableClass::HA, {}, false, BotTag::Plain};
            cur = substitute(sub.term->left, sub.term->name, arg);
            std::string key = canon_key(cur);
            auto known = local.find(key);
            if (known != local.end()) {
              // this level's state recurred: the subproblem is root-active
              Evidence ev{Evidence::Strategy::RootLoop, cur, fuel.spent - known->second, {}};
              return {SpineResult::Kind::Diverges, cur, UnsolvableClass::HA, ev, depth == 0, BotTag::Plain};
            }
            for (const LocalMap* anc : ancestors) {
              auto hit = anc->find(key);
              if (hit != anc->end()) {
                Evidence ev{Evidence::Strategy::SpineGrowth, cur, fuel.spent - hit->second, {}};
                return {SpineResult::Kind::Diverges, cur, UnsolvableClass::IL, ev, false, BotTag::Plain};
              }
            }
            local.emplace(std::move(key), fuel.spent);
            continue;
          }
        }
      }
    }
  }
}

inline SpineResult spine_whnf(const Term& t, Budget& fuel, const DefEnv& env) {
  std::vector<const LocalMap*> ancestors;
  return spine_whnf(t, fuel, ancestors, env, 0);
}

}  // namespace detail

// --- root activity -----------------------------------------------------------

struct RootActivity {
  enum class Kind { Yes, No, Unknown };
  Kind kind;
  Evidence evidence;  // Yes
  Term stable;        // No: abstraction, variable/⊥-headed spine, or an
                      // application whose spine head itself diverges
  long long steps = 0;
};

// Deterministic root-reduction check: contract the spine-head redex whenever
// the root is or can become a redex. Yes only with a cycle certificate.
inline RootActivity is_root_active(const Term& t, const DefEnv& env = DefEnv::standard(),
                                   long long fuel = 10000) {
  detail::Budget budget{fuel};
  detail::SpineResult r = detail::spine_whnf(resolve_refs(t, env), budget, env);
  switch (r.kind) {
    case detail::SpineResult::Kind::Whnf:
    case detail::SpineResult::Kind::ConstHead:
      return {RootActivity::Kind::No, {}, r.term, budget.spent};
    case detail::SpineResult::Kind::Diverges:
      if (r.cls == UnsolvableClass::HA && r.root_level)
        return {RootActivity::Kind::Yes, r.evidence, nullptr, budget.spent};
      return {RootActivity::Kind::No, r.evidence, r.term, budget.spent};
    case detail::SpineResult::Kind::OutOfFuel:
      return {RootActivity::Kind::Unknown, {}, nullptr, budget.spent};
  }
  return {RootActivity::Kind::Unknown, {}, nullptr, budget.spent};
}

// --- classification ------------------------------------------------------------

struct ClassifyResult {
  Verdict verdict;
  std::optional<HeadForm> head_form;  // Solvable only
};

inline ClassifyResult classify_full(const Term& t, const DefEnv& env = DefEnv::standard(),
                                    long long fuel = 10000, long long depth = 64) {
  detail::Budget budget{fuel};
  Term cur = resolve_refs(t, env);
  std::vector<std::string> binders;
  Path path_to_spine;  // Body steps for each stripped binder
  std::unordered_map<std::string, long long> strip_visited;
  strip_visited.emplace(canon_key(cur), 0);
  long long strips = 0;

  auto unknown = [&](Verdict::Reason r) {
    Verdict v;
    v.kind = Verdict::Kind::Unknown;
    v.reason = r;
    v.steps = budget.spent;
    return ClassifyResult{v, std::nullopt};
  };

  while (true) {
    detail::SpineResult r = detail::spine_whnf(cur, budget, env);
    switch (r.kind) {
      case detail::SpineResult::Kind::OutOfFuel:
        return unknown(Verdict::Reason::FuelExhausted);

      case detail::SpineResult::Kind::ConstHead: {
        std::vector<Term> args;
        Term head = detail::spine_head(r.term, args);
        Verdict v;
        v.steps = budget.spent;
        switch (head->tag) {
          case BotTag::HA: v.cls = UnsolvableClass::HA; break;
          case BotTag::IL: v.cls = UnsolvableClass::IL; break;
          case BotTag::O: v.cls = UnsolvableClass::O; break;
          default:
            // ⊥ without a definite class (Plain/D): no definite verdict here;
            // decode handles these constants directly
            return unknown(Verdict::Reason::FuelExhausted);
        }
        v.kind = Verdict::Kind::Unsolvable;
        v.evidence = Evidence{Evidence::Strategy::BotConst, head, 0, path_to_spine};
        return {v, std::nullopt};
      }

      case detail::SpineResult::Kind::Diverges: {
        Verdict v;
        v.kind = Verdict::Kind::Unsolvable;
        v.cls = r.cls;
        v.evidence = r.evidence;
        Path full = path_to_spine;
        full.insert(full.end(), r.evidence.path.begin(), r.evidence.path.end());
        v.evidence.path = std::move(full);
        v.steps = budget.spent;
        return {v, std::nullopt};
      }

      case detail::SpineResult::Kind::Whnf: {
        if (r.term->kind == TermNode::Kind::Lam) {
          ++strips;
          if (strips > depth) return unknown(Verdict::Reason::DepthExhausted);
          binders.push_back(r.term->name);
          path_to_spine.push_back(Step::Body);
          cur = r.term->left;
          auto [it, fresh] = strip_visited.emplace(canon_key(cur), strips);
          if (!fresh) {
            // binder-emission cycle: the stripped body recurs, so head
            // reduction emits λs forever
            Verdict v;
            v.kind = Verdict::Kind::Unsolvable;
            v.cls = UnsolvableClass::O;
            v.evidence = Evidence{Evidence::Strategy::BinderLoop, cur, strips - it->second, path_to_spine};
            v.steps = budget.spent;
            return {v, std::nullopt};
          }
          continue;
        }
        // variable-headed spine: head normal form λ binders . head args
        std::vector<Term> args;
        Term head = detail::spine_head(r.term, args);
        Verdict v;
        v.kind = Verdict::Kind::Solvable;
        v.binders = binders;
        v.head = head->name;
        v.arg_count = static_cast<long long>(args.size());
        v.steps = budget.spent;
        return {v, HeadForm{binders, head->name, std::move(args)}};
      }
    }
  }
}

inline Verdict classify(const Term& t, const DefEnv& env = DefEnv::standard(),
                        long long fuel = 10000, long long depth = 64) {
  return classify_full(t, env, fuel, depth).verdict;
}

// --- solvability ---------------------------------------------------------------

struct Solvability {
  enum class Kind { Yes, No, Unknown };
  Kind kind;
  UnsolvableClass cls = UnsolvableClass::HA;  // No only
  Verdict verdict;
};

inline Solvability is_solvable(const Term& t, const DefEnv& env = DefEnv::standard(),
                               long long fuel = 10000, long long depth = 64) {
  Verdict v = classify(t, env, fuel, depth);
  switch (v.kind) {
    case Verdict::Kind::Solvable: return {Solvability::Kind::Yes, UnsolvableClass::HA, v};
    case Verdict::Kind::Unsolvable: return {Solvability::Kind::No, v.cls, v};
    case Verdict::Kind::Unknown: return {Solvability::Kind::Unknown, UnsolvableClass::HA, v};
  }
  return {Solvability::Kind::Unknown, UnsolvableClass::HA, v};
}

// --- certificate replay ----------------------------------------------------------

// Re-run the recorded strategy from the witness and confirm it reproduces the
// recorded recurrence within loop_length contractions (plus slack for the
// decomposition work around it).
inline bool replay_evidence(const Evidence& ev, const DefEnv& env = DefEnv::standard()) {
  long long budget_steps = ev.loop_length + 64;
  switch (ev.strategy) {
    case Evidence::Strategy::BotConst:
      return ev.witness && ev.witness->kind == TermNode::Kind::Const;
    case Evidence::Strategy::RootLoop: {
      detail::Budget budget{budget_steps};
      auto r = detail::spine_whnf(resolve_refs(ev.witness, env), budget, env);
      return r.kind == detail::SpineResult::Kind::Diverges && r.cls == UnsolvableClass::HA;
    }
    case Evidence::Strategy::SpineGrowth: {
      detail::Budget budget{budget_steps};
      auto r = detail::spine_whnf(resolve_refs(ev.witness, env), budget, env);
      return r.kind == detail::SpineResult::Kind::Diverges;
    }
    case Evidence::Strategy::BinderLoop: {
      Verdict v = classify(ev.witness, env, budget_steps + 1024, ev.loop_length + 8);
      return v.kind == Verdict::Kind::Unsolvable && v.cls == UnsolvableClass::O;
    }
  }
  return false;
}

}  // namespace mccarthy
