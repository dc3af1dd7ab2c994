// Shared test helpers: deterministic random term/proposition generators and
// an applicative-order (rightmost-innermost) reducer used as an independent
// oracle against the normal-order engine.

#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mccarthy/reduce.hpp"
#include "mccarthy/term.hpp"

namespace testsupport {

using namespace mccarthy;

class TermGen {
 public:
  explicit TermGen(unsigned seed) : rng_(seed) {}

  // Random term with at most `size` nodes; variables drawn from a small pool
  // of bound and free names.
  Term term(int size) {
    std::vector<std::string> scope;
    return gen(size, scope);
  }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

 private:
  Term gen(int size, std::vector<std::string>& scope) {
    static const char* frees[] = {"u", "v", "w"};
    if (size <= 1) {
      if (!scope.empty() && pick(4) != 0) return var(scope[static_cast<size_t>(pick(static_cast<int>(scope.size())))]);
      return var(frees[pick(3)]);
    }
    switch (pick(3)) {
      case 0: {  // abstraction
        std::string binder = "x" + std::to_string(pick(4));
        scope.push_back(binder);
        Term body = gen(size - 1, scope);
        scope.pop_back();
        return lam(binder, body);
      }
      case 1: {  // application
        int lsize = 1 + pick(size - 1);
        Term f = gen(lsize, scope);
        Term a = gen(size - lsize, scope);
        return app(f, a);
      }
      default:
        return gen(1, scope);
    }
  }

  std::mt19937 rng_;
};

// Consistent renaming of bound variables (binder -> binder + suffix), giving
// an α-equivalent term with different binder names.
inline Term rename_binders(const Term& t, const std::string& suffix) {
  switch (t->kind) {
    case TermNode::Kind::Lam: {
      Term renamed_body = substitute(t->left, t->name, var(t->name + suffix));
      return lam(t->name + suffix, rename_binders(renamed_body, suffix));
    }
    case TermNode::Kind::App:
      return app(rename_binders(t->left, suffix), rename_binders(t->right, suffix));
    default:
      return t;
  }
}

// Rightmost-innermost (applicative order) reduction, fuel-bounded. Used only
// as an oracle for the Church-Rosser style property: when both strategies
// normalize, the normal forms must agree.
inline bool find_redex_applicative(const Term& t, Path& out) {
  switch (t->kind) {
    case TermNode::Kind::Lam:
      out.push_back(Step::Body);
      if (find_redex_applicative(t->left, out)) return true;
      out.pop_back();
      return false;
    case TermNode::Kind::App:
      out.push_back(Step::Arg);
      if (find_redex_applicative(t->right, out)) return true;
      out.back() = Step::Fun;
      if (find_redex_applicative(t->left, out)) return true;
      out.pop_back();
      return is_redex(t);
    default:
      return false;
  }
}

inline std::optional<Term> normalize_applicative(const Term& t, const DefEnv& env, long long fuel) {
  Term cur = resolve_refs(t, env);
  for (long long i = 0; i < fuel; ++i) {
    Path pos;
    if (!find_redex_applicative(cur, pos)) return cur;
    cur = replace_at(cur, pos, contract(subterm_at(cur, pos)));
  }
  return std::nullopt;
}

}  // namespace testsupport
