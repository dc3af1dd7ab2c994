// Depth-bounded prefixes of Böhm, Lévy-Longo and Berarducci trees. Each tree
// maps a different set of terms to ⊥: unsolvables, terms without a weak head
// normal form, and root-active terms respectively. ⊥ nodes appear only with a
// definite classifier verdict; an undecided observation yields a Cut node.

#pragma once

#include <string>
#include <vector>

#include "classify.hpp"
#include "term.hpp"

namespace mccarthy {

enum class CutReason { Depth, Fuel, Unknown };

inline const char* cut_reason_name(CutReason r) {
  switch (r) {
    case CutReason::Depth: return "depth";
    case CutReason::Fuel: return "fuel";
    case CutReason::Unknown: return "unknown-classification";
  }
  return "?";
}

struct TreeNode {
  enum class Kind { Head, Bot, LamStream, App, Cut };
  Kind kind;
  std::vector<std::string> binders;  // Head (may be empty), LamStream names
  std::string head_var;              // Head
  std::vector<TreeNode> children;    // Head: args; LamStream: [cont]; App: [fun, arg]
  BotTag tag = BotTag::Plain;        // Bot
  CutReason reason = CutReason::Depth;

  bool operator==(const TreeNode&) const = default;
};

inline TreeNode tree_head(std::vector<std::string> binders, std::string var, std::vector<TreeNode> children) {
  return {TreeNode::Kind::Head, std::move(binders), std::move(var), std::move(children), BotTag::Plain, CutReason::Depth};
}
inline TreeNode tree_bot(BotTag tag = BotTag::Plain) {
  return {TreeNode::Kind::Bot, {}, "", {}, tag, CutReason::Depth};
}
inline TreeNode tree_cut(CutReason r) { return {TreeNode::Kind::Cut, {}, "", {}, BotTag::Plain, r}; }
inline TreeNode tree_lam_stream(std::vector<std::string> names, TreeNode cont) {
  return {TreeNode::Kind::LamStream, std::move(names), "", {std::move(cont)}, BotTag::Plain, CutReason::Depth};
}
inline TreeNode tree_app(TreeNode fun, TreeNode arg) {
  return {TreeNode::Kind::App, {}, "", {std::move(fun), std::move(arg)}, BotTag::Plain, CutReason::Depth};
}

inline bool tree_exact(const TreeNode& t) {
  if (t.kind == TreeNode::Kind::Cut) return false;
  for (const auto& c : t.children)
    if (!tree_exact(c)) return false;
  return true;
}

namespace detail {
inline CutReason cut_for(Verdict::Reason r) {
  return r == Verdict::Reason::FuelExhausted ? CutReason::Fuel : CutReason::Unknown;
}
}  // namespace detail

// --- Böhm tree: unsolvables become ⊥ -----------------------------------------

inline TreeNode bohm_tree(const Term& t, long long depth = 16, long long fuel = 10000,
                          const DefEnv& env = DefEnv::standard()) {
  if (depth <= 0) return tree_cut(CutReason::Depth);
  Term res = resolve_refs(t, env);
  if (res->kind == TermNode::Kind::Const) return tree_bot(res->tag);
  // the classifier's binder-strip bound is independent of the tree depth
  ClassifyResult r = classify_full(res, env, fuel, std::max<long long>(depth, 64));
  switch (r.verdict.kind) {
    case Verdict::Kind::Unsolvable:
      return tree_bot(BotTag::Plain);
    case Verdict::Kind::Unknown:
      return tree_cut(detail::cut_for(r.verdict.reason));
    case Verdict::Kind::Solvable: {
      std::vector<TreeNode> children;
      for (const Term& arg : r.head_form->args)
        children.push_back(bohm_tree(arg, depth - 1, fuel, env));
      return tree_head(r.head_form->binders, r.head_form->head, std::move(children));
    }
  }
  return tree_cut(CutReason::Unknown);
}

// --- Lévy-Longo tree: abstractions observed one at a time ---------------------

inline TreeNode levy_longo_tree(const Term& t, long long depth = 16, long long fuel = 10000,
                                const DefEnv& env = DefEnv::standard()) {
  detail::Budget budget{fuel};
  Term cur = resolve_refs(t, env);
  std::vector<std::string> stream;
  long long d = depth;
  while (true) {
    if (d <= 0) {
      TreeNode cut = tree_cut(CutReason::Depth);
      return stream.empty() ? cut : tree_lam_stream(stream, cut);
    }
    if (cur->kind == TermNode::Kind::Const) {
      TreeNode leaf = tree_bot(cur->tag);
      return stream.empty() ? leaf : tree_lam_stream(stream, leaf);
    }
    detail::SpineResult r = detail::spine_whnf(cur, budget, env);
    switch (r.kind) {
      case detail::SpineResult::Kind::Diverges: {
        TreeNode leaf = tree_bot(BotTag::Plain);
        return stream.empty() ? leaf : tree_lam_stream(stream, leaf);
      }
      case detail::SpineResult::Kind::OutOfFuel: {
        TreeNode cut = tree_cut(CutReason::Fuel);
        return stream.empty() ? cut : tree_lam_stream(stream, cut);
      }
      case detail::SpineResult::Kind::ConstHead: {
        std::vector<Term> args;
        Term head = detail::spine_head(r.term, args);
        TreeNode leaf = tree_bot(head->tag);
        return stream.empty() ? leaf : tree_lam_stream(stream, leaf);
      }
      case detail::SpineResult::Kind::Whnf: {
        if (r.term->kind == TermNode::Kind::Lam) {
          stream.push_back(r.term->name);
          cur = r.term->left;
          --d;
          continue;
        }
        std::vector<Term> args;
        Term head = detail::spine_head(r.term, args);
        std::vector<TreeNode> children;
        for (const Term& arg : args)
          children.push_back(levy_longo_tree(arg, d - 1, fuel, env));
        TreeNode node = tree_head({}, head->name, std::move(children));
        return stream.empty() ? node : tree_lam_stream(stream, node);
      }
    }
  }
}

// --- Berarducci tree: only root-active terms become ⊥ -------------------------

namespace detail {
constexpr long long kTreeNodeBudget = 4096;

inline TreeNode berarducci_rec(const Term& t, long long depth, long long fuel,
                               const DefEnv& env, long long& nodes) {
  if (depth <= 0 || --nodes <= 0) return tree_cut(CutReason::Depth);
  Term res = t;
  while (res->kind == TermNode::Kind::Ref) res = env.lookup(res->name);
  if (res->kind == TermNode::Kind::Const) return tree_bot(res->tag);

  RootActivity ra = is_root_active(res, env, fuel);
  switch (ra.kind) {
    case RootActivity::Kind::Yes:
      return tree_bot(BotTag::Plain);
    case RootActivity::Kind::Unknown:
      return tree_cut(CutReason::Fuel);
    case RootActivity::Kind::No:
      break;
  }
  Term stable = ra.stable;

  if (stable->kind == TermNode::Kind::Lam) {
    // strip the structural binders of the stable form
    std::vector<std::string> binders;
    Term body = stable;
    while (body->kind == TermNode::Kind::Lam) {
      binders.push_back(body->name);
      body = body->left;
    }
    // a variable-headed body completes a head-normal-form level
    std::vector<Term> args;
    Term head = spine_head(body, args);
    if (head->kind == TermNode::Kind::Var) {
      std::vector<TreeNode> children;
      for (const Term& arg : args)
        children.push_back(berarducci_rec(arg, depth - 1, fuel, env, nodes));
      return tree_head(std::move(binders), head->name, std::move(children));
    }
    // otherwise each emitted binder run costs one level; consecutive
    // λ-stream nodes are flattened
    TreeNode cont = berarducci_rec(body, depth - 1, fuel, env, nodes);
    if (cont.kind == TreeNode::Kind::LamStream) {
      binders.insert(binders.end(), cont.binders.begin(), cont.binders.end());
      return tree_lam_stream(std::move(binders), std::move(cont.children[0]));
    }
    return tree_lam_stream(std::move(binders), std::move(cont));
  }
  if (stable->kind == TermNode::Kind::Var) return tree_head({}, stable->name, {});
  if (stable->kind == TermNode::Kind::Const) return tree_bot(stable->tag);

  // root-stable application
  std::vector<Term> args;
  Term head = spine_head(stable, args);
  if (head->kind == TermNode::Kind::Var) {
    std::vector<TreeNode> children;
    for (const Term& arg : args)
      children.push_back(berarducci_rec(arg, depth - 1, fuel, env, nodes));
    return tree_head({}, head->name, std::move(children));
  }
  // spine head diverges without ever becoming an abstraction (root-active
  // head or growing spine): descend the application; the left spine carries
  // the depth budget, argument subtrees keep the current level's budget
  return tree_app(berarducci_rec(stable->left, depth - 1, fuel, env, nodes),
                  berarducci_rec(stable->right, depth, fuel, env, nodes));
}
}  // namespace detail

inline TreeNode berarducci_tree(const Term& t, long long depth = 16, long long fuel = 10000,
                                const DefEnv& env = DefEnv::standard()) {
  long long nodes = detail::kTreeNodeBudget;
  return detail::berarducci_rec(resolve_refs(t, env), depth, fuel, env, nodes);
}

// --- rendering -----------------------------------------------------------------

namespace detail {
inline void render_tree_rec(const TreeNode& t, std::string& out, bool arg_pos) {
  switch (t.kind) {
    case TreeNode::Kind::Bot:
      out += bot_tag_pretty(t.tag);
      return;
    case TreeNode::Kind::Cut:
      out += "...";
      return;
    case TreeNode::Kind::LamStream: {
      if (arg_pos) out += '(';
      out += "λ";
      for (size_t i = 0; i < t.binders.size(); ++i) {
        if (i) out += ' ';
        out += t.binders[i];
      }
      out += ". ";
      render_tree_rec(t.children[0], out, false);
      if (arg_pos) out += ')';
      return;
    }
    case TreeNode::Kind::Head: {
      bool parens = arg_pos && (!t.binders.empty() || !t.children.empty());
      if (parens) out += '(';
      if (!t.binders.empty()) {
        out += "λ";
        for (size_t i = 0; i < t.binders.size(); ++i) {
          if (i) out += ' ';
          out += t.binders[i];
        }
        out += ". ";
      }
      out += t.head_var;
      for (const auto& c : t.children) {
        out += ' ';
        render_tree_rec(c, out, true);
      }
      if (parens) out += ')';
      return;
    }
    case TreeNode::Kind::App: {
      if (arg_pos) out += '(';
      render_tree_rec(t.children[0], out, false);
      out += ' ';
      render_tree_rec(t.children[1], out, true);
      if (arg_pos) out += ')';
      return;
    }
  }
}
}  // namespace detail

inline std::string render_tree(const TreeNode& t) {
  std::string out;
  detail::render_tree_rec(t, out, false);
  return out;
}

}  // namespace mccarthy
