// Core λ-term representation: variables, abstractions, applications, ⊥
// constants and named references resolved through a definition environment.
// Terms are immutable and shared; every operation below is pure.

#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mccarthy {

struct ResolveError : std::runtime_error {
  explicit ResolveError(const std::string& what) : std::runtime_error(what) {}
};
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Tags for the irreducible ⊥ constants. Plain is the single third value,
// HA/IL/O are the refined classes, D stands for IL ∪ O.
enum class BotTag { Plain, HA, IL, O, D };

inline const char* bot_tag_ascii(BotTag t) {
  switch (t) {
    case BotTag::Plain: return "_|_";
    case BotTag::HA: return "_HA";
    case BotTag::IL: return "_IL";
    case BotTag::O: return "_O";
    case BotTag::D: return "_D";
  }
  return "_|_";
}

inline const char* bot_tag_pretty(BotTag t) {
  switch (t) {
    case BotTag::Plain: return "⊥";      // ⊥
    case BotTag::HA: return "⊥HA";
    case BotTag::IL: return "⊥IL";
    case BotTag::O: return "⊥O";
    case BotTag::D: return "⊥D";
  }
  return "⊥";
}

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
  enum class Kind { Var, Lam, App, Const, Ref };
  Kind kind;
  std::string name;  // Var/Ref name, Lam binder
  Term left;         // Lam body, App function
  Term right;        // App argument
  BotTag tag = BotTag::Plain;
};

inline Term var(std::string name) {
  return std::make_shared<TermNode>(TermNode{TermNode::Kind::Var, std::move(name), nullptr, nullptr, BotTag::Plain});
}
inline Term lam(std::string binder, Term body) {
  return std::make_shared<TermNode>(TermNode{TermNode::Kind::Lam, std::move(binder), std::move(body), nullptr, BotTag::Plain});
}
inline Term app(Term fun, Term arg) {
  return std::make_shared<TermNode>(TermNode{TermNode::Kind::App, "", std::move(fun), std::move(arg), BotTag::Plain});
}
inline Term app(Term fun, Term a, Term b) { return app(app(std::move(fun), std::move(a)), std::move(b)); }
inline Term app(Term fun, Term a, Term b, Term c) { return app(app(std::move(fun), std::move(a), std::move(b)), std::move(c)); }
inline Term bot(BotTag tag) {
  return std::make_shared<TermNode>(TermNode{TermNode::Kind::Const, "", nullptr, nullptr, tag});
}
inline Term ref(std::string name) {
  return std::make_shared<TermNode>(TermNode{TermNode::Kind::Ref, std::move(name), nullptr, nullptr, BotTag::Plain});
}

// Position of a subterm: Fun/Arg descend into an application, Body under a λ.
enum class Step { Fun, Arg, Body };
using Path = std::vector<Step>;

inline const char* step_name(Step s) {
  switch (s) {
    case Step::Fun: return "fun";
    case Step::Arg: return "arg";
    case Step::Body: return "body";
  }
  return "?";
}

// --- free variables ------------------------------------------------------

namespace detail {
inline void free_vars_rec(const Term& t, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (t->kind) {
    case TermNode::Kind::Var:
      if (std::find(bound.rbegin(), bound.rend(), t->name) == bound.rend()) out.insert(t->name);
      return;
    case TermNode::Kind::Lam:
      bound.push_back(t->name);
      free_vars_rec(t->left, bound, out);
      bound.pop_back();
      return;
    case TermNode::Kind::App:
      free_vars_rec(t->left, bound, out);
      free_vars_rec(t->right, bound, out);
      return;
    case TermNode::Kind::Const:
    case TermNode::Kind::Ref:
      // Definitions are closed by DefEnv invariant, so a Ref contributes nothing.
      return;
  }
}
}  // namespace detail

inline std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  detail::free_vars_rec(t, bound, out);
  return out;
}

// --- definition environment ----------------------------------------------

// Named combinator library. Preloaded with the standard special terms; user
// definitions may reference earlier names but never shadow an existing one,
// and must be closed. The definition graph is therefore acyclic.
class DefEnv {
 public:
  DefEnv() { preload(); }

  bool contains(const std::string& name) const { return defs_.count(name) != 0; }

  const Term& lookup(const std::string& name) const {
    auto it = defs_.find(name);
    if (it == defs_.end()) throw ResolveError("unresolved reference: " + name);
    return it->second;
  }

  void define(const std::string& name, const Term& body) {
    if (contains(name)) throw PreconditionError("definition would shadow existing name: " + name);
    if (!free_vars(body).empty()) throw PreconditionError("definition is not closed: " + name);
    check_refs(body);
    defs_.emplace(name, body);
  }

  const std::map<std::string, Term>& all() const { return defs_; }

  static const DefEnv& standard() {
    static const DefEnv env;
    return env;
  }

 private:
  void check_refs(const Term& t) const {
    switch (t->kind) {
      case TermNode::Kind::Ref:
        lookup(t->name);
        return;
      case TermNode::Kind::Lam:
        check_refs(t->left);
        return;
      case TermNode::Kind::App:
        check_refs(t->left);
        check_refs(t->right);
        return;
      default:
        return;
    }
  }

  void preload() {
    Term i = lam("x", var("x"));
    Term k = lam("x", lam("y", var("x")));
    Term omega_half = lam("x", app(var("x"), var("x")));
    Term omega = app(omega_half, omega_half);
    // Turing's fixed point combinator (λxy.y(xxy))(λxy.y(xxy)).
    Term theta_half = lam("x", lam("y", app(var("y"), app(var("x"), var("x"), var("y")))));
    Term theta = app(theta_half, theta_half);
    defs_.emplace("I", i);
    defs_.emplace("K", k);
    defs_.emplace("OMEGA", omega);
    defs_.emplace("THETA", theta);
    defs_.emplace("T", lam("x", lam("y", var("x"))));
    defs_.emplace("F", lam("x", lam("y", var("y"))));
    defs_.emplace("T_I", lam("x", lam("y", app(var("y"), ref("I"), ref("I"), var("x")))));
    defs_.emplace("F_I", lam("x", app(var("x"), ref("I"), ref("I"), ref("I"))));
  }

  std::map<std::string, Term> defs_;
};

// Expand every Ref recursively. Terminates because definitions form a DAG.
inline Term resolve_refs(const Term& t, const DefEnv& env) {
  switch (t->kind) {
    case TermNode::Kind::Ref:
      return resolve_refs(env.lookup(t->name), env);
    case TermNode::Kind::Lam: {
      Term body = resolve_refs(t->left, env);
      return body == t->left ? t : lam(t->name, body);
    }
    case TermNode::Kind::App: {
      Term f = resolve_refs(t->left, env);
      Term a = resolve_refs(t->right, env);
      return (f == t->left && a == t->right) ? t : app(f, a);
    }
    default:
      return t;
  }
}

// --- substitution ---------------------------------------------------------

// Smallest unused "base" or "baseN" not in `avoid`.
inline std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  if (!avoid.count(base)) return base;
  for (int i = 1;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!avoid.count(candidate)) return candidate;
  }
}

namespace detail {
inline Term substitute_rec(const Term& body, const std::string& name, const Term& value,
                           const std::set<std::string>& value_frees) {
  switch (body->kind) {
    case TermNode::Kind::Var:
      return body->name == name ? value : body;
    case TermNode::Kind::Const:
    case TermNode::Kind::Ref:
      return body;
    case TermNode::Kind::App:
      return app(substitute_rec(body->left, name, value, value_frees),
                 substitute_rec(body->right, name, value, value_frees));
    case TermNode::Kind::Lam: {
      if (body->name == name) return body;  // shadowed
      std::set<std::string> body_frees = free_vars(body->left);
      if (!body_frees.count(name)) return body;
      if (value_frees.count(body->name)) {
        // binder would capture a free variable of value: rename it first
        std::set<std::string> avoid = value_frees;
        avoid.insert(body_frees.begin(), body_frees.end());
        avoid.insert(name);
        std::string renamed = fresh_name(body->name, avoid);
        Term renamed_body = substitute_rec(body->left, body->name, var(renamed), {});
        return lam(renamed, substitute_rec(renamed_body, name, value, value_frees));
      }
      return lam(body->name, substitute_rec(body->left, name, value, value_frees));
    }
  }
  return body;
}
}  // namespace detail

// Capture-avoiding substitution body[name := value].
inline Term substitute(const Term& body, const std::string& name, const Term& value) {
  return detail::substitute_rec(body, name, value, free_vars(value));
}

// --- α-equivalence and canonical (nameless) forms -------------------------

namespace detail {
inline std::optional<int> bound_index(const std::vector<std::string>& binders, const std::string& name) {
  for (int i = static_cast<int>(binders.size()) - 1; i >= 0; --i)
    if (binders[static_cast<size_t>(i)] == name) return static_cast<int>(binders.size()) - 1 - i;
  return std::nullopt;
}

inline bool alpha_rec(Term a, Term b, std::vector<std::string>& ba, std::vector<std::string>& bb,
                      const DefEnv& env) {
  while (a->kind == TermNode::Kind::Ref) a = env.lookup(a->name);
  while (b->kind == TermNode::Kind::Ref) b = env.lookup(b->name);
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermNode::Kind::Var: {
      auto ia = bound_index(ba, a->name);
      auto ib = bound_index(bb, b->name);
      if (ia.has_value() != ib.has_value()) return false;
      return ia.has_value() ? *ia == *ib : a->name == b->name;
    }
    case TermNode::Kind::Const:
      return a->tag == b->tag;
    case TermNode::Kind::Lam: {
      ba.push_back(a->name);
      bb.push_back(b->name);
      bool ok = alpha_rec(a->left, b->left, ba, bb, env);
      ba.pop_back();
      bb.pop_back();
      return ok;
    }
    case TermNode::Kind::App:
      return alpha_rec(a->left, b->left, ba, bb, env) && alpha_rec(a->right, b->right, ba, bb, env);
    case TermNode::Kind::Ref:
      return false;  // unreachable, resolved above
  }
  return false;
}

// Serialized de Bruijn form. Injective: every node is tagged and leaves are
// ';'-terminated, so structural identity coincides with string equality.
inline void canon_rec(const Term& t, std::vector<std::string>& binders, std::string& out, const DefEnv* env) {
  switch (t->kind) {
    case TermNode::Kind::Var: {
      auto idx = bound_index(binders, t->name);
      if (idx)
        out += 'b', out += std::to_string(*idx), out += ';';
      else
        out += 'f', out += t->name, out += ';';
      return;
    }
    case TermNode::Kind::Lam:
      out += 'L';
      binders.push_back(t->name);
      canon_rec(t->left, binders, out, env);
      binders.pop_back();
      return;
    case TermNode::Kind::App:
      out += 'A';
      canon_rec(t->left, binders, out, env);
      canon_rec(t->right, binders, out, env);
      return;
    case TermNode::Kind::Const:
      out += 'C';
      out += std::to_string(static_cast<int>(t->tag));
      out += ';';
      return;
    case TermNode::Kind::Ref: {
      if (!env) throw ResolveError("unresolved reference in canonical form: " + t->name);
      canon_rec(env->lookup(t->name), binders, out, env);
      return;
    }
  }
}
}  // namespace detail

// Syntactic identity modulo α (references resolved first).
inline bool alpha_eq(const Term& a, const Term& b, const DefEnv& env = DefEnv::standard()) {
  std::vector<std::string> ba, bb;
  return detail::alpha_rec(a, b, ba, bb, env);
}

// The same tree with binders replaced by binding-depth indices, serialized.
// Used only for equality and hashing; α-equivalent terms map to equal forms.
struct NamelessTerm {
  std::string repr;
  bool operator==(const NamelessTerm&) const = default;
};

inline NamelessTerm canonicalize(const Term& t, const DefEnv& env = DefEnv::standard()) {
  std::string out;
  std::vector<std::string> binders;
  detail::canon_rec(t, binders, out, &env);
  return NamelessTerm{std::move(out)};
}

// Fast path for terms known to contain no Refs (reduction engine internals).
inline std::string canon_key(const Term& t) {
  std::string out;
  std::vector<std::string> binders;
  detail::canon_rec(t, binders, out, nullptr);
  return out;
}

// --- navigation ------------------------------------------------------------

inline Term subterm_at(const Term& t, const Path& path) {
  Term cur = t;
  for (Step s : path) {
    switch (s) {
      case Step::Fun:
        if (cur->kind != TermNode::Kind::App) throw PreconditionError("path step 'fun' at non-application");
        cur = cur->left;
        break;
      case Step::Arg:
        if (cur->kind != TermNode::Kind::App) throw PreconditionError("path step 'arg' at non-application");
        cur = cur->right;
        break;
      case Step::Body:
        if (cur->kind != TermNode::Kind::Lam) throw PreconditionError("path step 'body' at non-abstraction");
        cur = cur->left;
        break;
    }
  }
  return cur;
}

inline Term replace_at(const Term& t, const Path& path, const Term& sub, size_t i = 0) {
  if (i == path.size()) return sub;
  switch (path[i]) {
    case Step::Fun:
      return app(replace_at(t->left, path, sub, i + 1), t->right);
    case Step::Arg:
      return app(t->left, replace_at(t->right, path, sub, i + 1));
    case Step::Body:
      return lam(t->name, replace_at(t->left, path, sub, i + 1));
  }
  return sub;
}

// --- printing ---------------------------------------------------------------

namespace detail {
inline bool path_here(const Path* hl, const Path& at) { return hl && *hl == at; }

inline void print_rec(const Term& t, std::string& out, bool fun_pos, bool arg_pos,
                      const Path* highlight, Path& at) {
  bool braced = path_here(highlight, at);
  if (braced) out += '{';
  switch (t->kind) {
    case TermNode::Kind::Var:
    case TermNode::Kind::Ref:
      out += t->name;
      break;
    case TermNode::Kind::Const:
      out += bot_tag_ascii(t->tag);
      break;
    case TermNode::Kind::Lam: {
      bool parens = (fun_pos || arg_pos) && !braced;
      if (parens) out += '(';
      out += "\\";
      out += t->name;
      // collapse consecutive binders (but never across a highlight point)
      Term body = t->left;
      size_t pushed = 1;
      at.push_back(Step::Body);
      while (body->kind == TermNode::Kind::Lam && !path_here(highlight, at)) {
        out += ' ';
        out += body->name;
        body = body->left;
        at.push_back(Step::Body);
        ++pushed;
      }
      out += ". ";
      print_rec(body, out, false, false, highlight, at);
      at.resize(at.size() - pushed);
      if (parens) out += ')';
      break;
    }
    case TermNode::Kind::App: {
      bool parens = arg_pos && !braced;
      if (parens) out += '(';
      at.push_back(Step::Fun);
      print_rec(t->left, out, true, false, highlight, at);
      at.pop_back();
      out += ' ';
      at.push_back(Step::Arg);
      print_rec(t->right, out, false, true, highlight, at);
      at.pop_back();
      if (parens) out += ')';
      break;
    }
  }
  if (braced) out += '}';
}
}  // namespace detail

inline std::string to_string(const Term& t, const Path* highlight = nullptr) {
  std::string out;
  Path at;
  detail::print_rec(t, out, false, false, highlight, at);
  return out;
}

}  // namespace mccarthy
