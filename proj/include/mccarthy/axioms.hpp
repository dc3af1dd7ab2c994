// Equation checker for the Guzman–Squier axioms of three-valued
// left-sequential logic and the Bergstra–Van de Pol axioms of the four-valued
// logic, by exhaustive evaluation of every assignment through the λ-engine.
// Equations hold at the truth-value level (decode equality), not as syntactic
// identities.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "prop.hpp"

namespace mccarthy {

struct Equation {
  std::string name;
  Prop lhs, rhs;
  std::vector<std::string> vars;  // metavariables, enumeration order
};

struct EqCheck {
  enum class Kind { Holds, CounterExample };
  Kind kind = Kind::Holds;
  Assignment assignment;
  Tv lhs_value = Tv::Bot, rhs_value = Tv::Bot;
  long long assignments_checked = 0;

  bool holds() const { return kind == Kind::Holds; }
};

// Enumerate all arity^k assignments in domain order (T < F < ⊥HA < ⊥D/⊥IL <
// ⊥O); the reported counterexample is the first in that order.
inline EqCheck check_equation(const Equation& eq, int arity, Style style = Style::Church,
                              const DefEnv& env = DefEnv::standard(), long long fuel = 10000) {
  const auto& domain = tv_domain(arity);
  EqCheck result;
  Assignment assignment;
  std::function<bool(size_t)> walk = [&](size_t i) -> bool {
    if (i == eq.vars.size()) {
      ++result.assignments_checked;
      DecodeResult l = eval_prop(eq.lhs, {}, assignment, arity, style, env, fuel);
      DecodeResult r = eval_prop(eq.rhs, {}, assignment, arity, style, env, fuel);
      if (!l.is_value() || !r.is_value()) {
        std::string what = "axiom " + eq.name + " did not resolve at";
        for (const auto& [k, v] : assignment) what += " " + k + "=" + tv_ascii(v);
        throw DecodeError(what);
      }
      if (l.value != r.value) {
        result.kind = EqCheck::Kind::CounterExample;
        result.assignment = assignment;
        result.lhs_value = l.value;
        result.rhs_value = r.value;
        return false;
      }
      return true;
    }
    for (Tv v : domain) {
      assignment[eq.vars[i]] = v;
      if (!walk(i + 1)) return false;
    }
    return true;
  };
  walk(0);
  return result;
}

struct CheckReport {
  struct Entry {
    Equation equation;
    int arity;
    bool expected_to_hold;
    EqCheck result;
  };
  std::vector<Entry> entries;
  long long held = 0, failed = 0;
  bool all_as_expected = true;

  void add(const Equation& eq, int arity, bool expected, const EqCheck& r) {
    entries.push_back({eq, arity, expected, r});
    (r.holds() ? held : failed)++;
    if (r.holds() != expected) all_as_expected = false;
  }
};

namespace detail {
inline Prop P(const char* text) { return parse_prop(text).main; }
}  // namespace detail

// Guzman–Squier complete axiomatisation of McCarthy's three-valued logic.
inline const std::vector<Equation>& guzman_squier_axioms() {
  using detail::P;
  static const std::vector<Equation> axioms{
      {"G1", P("~T"), P("F"), {}},
      {"G2", P("~_|_"), P("_|_"), {}},
      {"G3", P("~(~x)"), P("x"), {"x"}},
      {"G4", P("~(x /\\ y)"), P("~x \\/ ~y"), {"x", "y"}},
      {"G5", P("x -> y"), P("~x \\/ y"), {"x", "y"}},
      {"G6", P("x /\\ (y /\\ z)"), P("(x /\\ y) /\\ z"), {"x", "y", "z"}},
      {"G7", P("T /\\ x"), P("x"), {"x"}},
      {"G8", P("x \\/ (x /\\ y)"), P("x"), {"x", "y"}},
      {"G9", P("x /\\ (y \\/ z)"), P("(x /\\ y) \\/ (x /\\ z)"), {"x", "y", "z"}},
      {"G10", P("(x \\/ y) /\\ z"), P("(x /\\ z) \\/ (~x /\\ y /\\ z)"), {"x", "y", "z"}},
      {"G11", P("(x /\\ y) \\/ (y /\\ x)"), P("(y /\\ x) \\/ (x /\\ y)"), {"x", "y"}},
  };
  return axioms;
}

// Bergstra–Van de Pol axiomatisation of the four-valued logic; m is ⊥HA and
// d is ⊥D. Axiom 9 is checked exactly as printed (with its duplicated final
// disjunct) and additionally in the Guzman-10 form.
inline const std::vector<Equation>& bergstra_vdpol_axioms() {
  using detail::P;
  static const std::vector<Equation> axioms{
      {"B1", P("~_D"), P("_D"), {}},
      {"B2", P("~_HA"), P("_HA"), {}},
      {"B3", P("~T"), P("F"), {}},
      {"B4", P("~(~x)"), P("x"), {"x"}},
      {"B5", P("T /\\ x"), P("x"), {"x"}},
      {"B6", P("F /\\ x"), P("F"), {"x"}},
      {"B7", P("x \\/ y"), P("~(~x /\\ ~y)"), {"x", "y"}},
      {"B8", P("x /\\ (y /\\ z)"), P("(x /\\ y) /\\ z"), {"x", "y", "z"}},
      {"B9", P("(x \\/ y) /\\ z"), P("(~x /\\ y /\\ z) \\/ (x /\\ z) \\/ (x /\\ z)"),
       {"x", "y", "z"}},
      {"B9-g10-form", P("(x \\/ y) /\\ z"), P("(x /\\ z) \\/ (~x /\\ y /\\ z)"), {"x", "y", "z"}},
  };
  return axioms;
}

// At arity 5 the single ¬d = d axiom splits into one ¬p = p axiom per new
// truth value.
inline std::vector<Equation> bergstra_vdpol_axioms_arity5() {
  using detail::P;
  std::vector<Equation> axioms = bergstra_vdpol_axioms();
  axioms[0] = {"B1-il", P("~_IL"), P("_IL"), {}};
  axioms.insert(axioms.begin() + 1, {"B1-o", P("~_O"), P("_O"), {}});
  return axioms;
}

inline Equation guzman_axiom_11() { return guzman_squier_axioms()[10]; }

// All 11 axioms hold over the full three-valued domain.
inline CheckReport guzman_squier_suite(Style style = Style::Church,
                                       const DefEnv& env = DefEnv::standard(),
                                       long long fuel = 10000) {
  CheckReport report;
  for (const Equation& eq : guzman_squier_axioms())
    report.add(eq, 3, true, check_equation(eq, 3, style, env, fuel));
  return report;
}

// All axioms hold at arity 4 and (adapted) at arity 5; Guzman's axiom 11
// fails at arity 4 with the canonical ⊥HA/⊥D counterexample.
inline CheckReport bergstra_vdpol_suite(Style style = Style::Church,
                                        const DefEnv& env = DefEnv::standard(),
                                        long long fuel = 10000) {
  CheckReport report;
  for (const Equation& eq : bergstra_vdpol_axioms())
    report.add(eq, 4, true, check_equation(eq, 4, style, env, fuel));
  for (const Equation& eq : bergstra_vdpol_axioms_arity5())
    report.add(eq, 5, true, check_equation(eq, 5, style, env, fuel));
  report.add(guzman_axiom_11(), 4, false, check_equation(guzman_axiom_11(), 4, style, env, fuel));
  return report;
}

// --- rendering ---------------------------------------------------------------

inline std::string render_report(const CheckReport& report) {
  std::string out;
  for (const auto& e : report.entries) {
    out += e.equation.name + " (arity " + std::to_string(e.arity) + "): ";
    if (e.result.holds()) {
      out += "holds over " + std::to_string(e.result.assignments_checked) + " assignments";
      if (!e.expected_to_hold) out += " (unexpected!)";
    } else {
      out += "counterexample at";
      for (const auto& [k, v] : e.result.assignment) out += " " + k + "=" + tv_pretty(v);
      out += ": lhs " + std::string(tv_pretty(e.result.lhs_value)) + ", rhs " +
             tv_pretty(e.result.rhs_value);
      if (e.expected_to_hold) out += " (unexpected!)";
    }
    out += "\n";
  }
  out += "held: " + std::to_string(report.held) + ", failed: " + std::to_string(report.failed) +
         (report.all_as_expected ? " (all as expected)" : " (DEVIATIONS FOUND)") + "\n";
  return out;
}

}  // namespace mccarthy
