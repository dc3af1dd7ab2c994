// Truth values of the 2/3/4/5-valued left-sequential logics, their Church
// and λI encodings, decoding of λ-terms back into truth values, and truth
// table generation. Tables are always computed through the λ-engine.

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "classify.hpp"
#include "parser.hpp"
#include "reduce.hpp"
#include "term.hpp"

namespace mccarthy {

enum class Tv { T, F, Bot, BotHA, BotIL, BotO, BotD };

enum class Style { Church, LambdaI };

inline const char* style_name(Style s) { return s == Style::Church ? "church" : "lambda-i"; }

inline const char* tv_ascii(Tv v) {
  switch (v) {
    case Tv::T: return "T";
    case Tv::F: return "F";
    case Tv::Bot: return "bot";
    case Tv::BotHA: return "bot-ha";
    case Tv::BotIL: return "bot-il";
    case Tv::BotO: return "bot-o";
    case Tv::BotD: return "bot-d";
  }
  return "?";
}

inline const char* tv_pretty(Tv v) {
  switch (v) {
    case Tv::T: return "T";
    case Tv::F: return "F";
    case Tv::Bot: return "⊥";
    case Tv::BotHA: return "⊥HA";
    case Tv::BotIL: return "⊥IL";
    case Tv::BotO: return "⊥O";
    case Tv::BotD: return "⊥D";
  }
  return "?";
}

inline std::optional<Tv> tv_parse(const std::string& s) {
  if (s == "T") return Tv::T;
  if (s == "F") return Tv::F;
  if (s == "bot" || s == "Bot" || s == "_|_") return Tv::Bot;
  if (s == "bot-ha" || s == "BotHA" || s == "_HA" || s == "m") return Tv::BotHA;
  if (s == "bot-il" || s == "BotIL" || s == "_IL") return Tv::BotIL;
  if (s == "bot-o" || s == "BotO" || s == "_O") return Tv::BotO;
  if (s == "bot-d" || s == "BotD" || s == "_D" || s == "d") return Tv::BotD;
  return std::nullopt;
}

// Enumeration order per arity; doubles as the counterexample ordering
// T < F < BotHA < BotD/BotIL < BotO.
inline const std::vector<Tv>& tv_domain(int arity) {
  static const std::vector<Tv> d2{Tv::T, Tv::F};
  static const std::vector<Tv> d3{Tv::T, Tv::F, Tv::Bot};
  static const std::vector<Tv> d4{Tv::T, Tv::F, Tv::BotHA, Tv::BotD};
  static const std::vector<Tv> d5{Tv::T, Tv::F, Tv::BotHA, Tv::BotIL, Tv::BotO};
  switch (arity) {
    case 2: return d2;
    case 3: return d3;
    case 4: return d4;
    case 5: return d5;
  }
  throw PreconditionError("arity must be 2, 3, 4 or 5");
}

// Project a truth value into a smaller arity: 5→4 maps ⊥IL,⊥O to ⊥D; any
// projection to 3 collapses every ⊥-class to ⊥; 3→2 is undefined on ⊥.
inline std::optional<Tv> project(Tv v, int arity) {
  if (v == Tv::T || v == Tv::F) return v;
  switch (arity) {
    case 2:
      return std::nullopt;
    case 3:
      return Tv::Bot;
    case 4:
      switch (v) {
        case Tv::BotHA: return Tv::BotHA;
        case Tv::BotIL:
        case Tv::BotO:
        case Tv::BotD: return Tv::BotD;
        default: return std::nullopt;  // plain ⊥ has no 4-valued refinement
      }
    case 5:
      switch (v) {
        case Tv::BotHA:
        case Tv::BotIL:
        case Tv::BotO: return v;
        default: return std::nullopt;
      }
  }
  return std::nullopt;
}

// --- encoding ----------------------------------------------------------------

// Canonical unsolvable representatives: HA → Ω, IL → Θ(λx.xI), O → ΘK.
inline Term representative(UnsolvableClass c) {
  switch (c) {
    case UnsolvableClass::HA: return ref("OMEGA");
    case UnsolvableClass::IL: return app(ref("THETA"), lam("x", app(var("x"), ref("I"))));
    case UnsolvableClass::O: return app(ref("THETA"), ref("K"));
  }
  throw PreconditionError("bad class");
}

inline Term encode_value(Tv v, Style style = Style::Church) {
  switch (v) {
    case Tv::T: return style == Style::Church ? ref("T") : ref("T_I");
    case Tv::F: return style == Style::Church ? ref("F") : ref("F_I");
    case Tv::Bot: return representative(UnsolvableClass::HA);
    case Tv::BotHA: return representative(UnsolvableClass::HA);
    case Tv::BotIL: return representative(UnsolvableClass::IL);
    case Tv::BotO: return representative(UnsolvableClass::O);
    case Tv::BotD: return representative(UnsolvableClass::IL);
  }
  throw PreconditionError("bad truth value");
}

// Connectives through the conditional-expression encoding: if-then-else is
// plain application, so these are purely syntactic constructions.
inline Term ite(const Term& b, const Term& m, const Term& n) { return app(b, m, n); }
inline Term neg(const Term& m, Style style = Style::Church) {
  return ite(m, encode_value(Tv::F, style), encode_value(Tv::T, style));
}
inline Term conj(const Term& m, const Term& n) { return ite(m, n, m); }
inline Term disj(const Term& m, const Term& n) { return ite(m, m, n); }
inline Term impl(const Term& m, const Term& n, Style style = Style::Church) {
  return ite(m, n, encode_value(Tv::T, style));
}

// --- decoding ----------------------------------------------------------------

struct DecodeResult {
  enum class Kind { Value, Unknown };
  Kind kind;
  Tv value = Tv::Bot;
  Verdict::Reason reason = Verdict::Reason::FuelExhausted;

  bool is_value() const { return kind == Kind::Value; }
  bool operator==(const DecodeResult&) const = default;
};

inline DecodeResult decode_value(Tv v) { return {DecodeResult::Kind::Value, v, Verdict::Reason::FuelExhausted}; }
inline DecodeResult decode_unknown(Verdict::Reason r) { return {DecodeResult::Kind::Unknown, Tv::Bot, r}; }

struct DecodeError : std::runtime_error {
  explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline Tv class_value(UnsolvableClass c, int arity) {
  if (arity == 2) throw DecodeError("not a Boolean: term is unsolvable (" + std::string(class_name(c)) + ")");
  if (arity == 3) return Tv::Bot;
  Tv fine = c == UnsolvableClass::HA ? Tv::BotHA : c == UnsolvableClass::IL ? Tv::BotIL : Tv::BotO;
  auto p = project(fine, arity);
  if (!p) throw DecodeError("cannot project class value");
  return *p;
}

inline Tv const_value(BotTag tag, int arity) {
  if (arity == 2) throw DecodeError("not a Boolean: ⊥ constant");
  switch (tag) {
    case BotTag::Plain:
      if (arity == 3) return Tv::Bot;
      throw DecodeError("plain ⊥ constant has no refinement at arity " + std::to_string(arity));
    case BotTag::HA: return arity == 3 ? Tv::Bot : Tv::BotHA;
    case BotTag::IL: return class_value(UnsolvableClass::IL, arity);
    case BotTag::O: return class_value(UnsolvableClass::O, arity);
    case BotTag::D:
      if (arity == 3) return Tv::Bot;
      if (arity == 4) return Tv::BotD;
      throw DecodeError("⊥D constant has no refinement at arity 5");
  }
  throw DecodeError("bad constant");
}
}  // namespace detail

// Evaluate a closed term to a truth value of the requested arity: α-equality
// with the style's Booleans gives T/F, a definite unsolvability verdict gives
// the class value projected into the arity, anything undecided is Unknown.
inline DecodeResult decode(const Term& t, int arity, Style style = Style::Church,
                           const DefEnv& env = DefEnv::standard(), long long fuel = 10000,
                           long long depth = 64) {
  (void)tv_domain(arity);  // validates arity
  Term res = resolve_refs(t, env);
  if (!free_vars(res).empty()) throw PreconditionError("decode requires a closed term: " + to_string(t));
  if (res->kind == TermNode::Kind::Const) return decode_value(detail::const_value(res->tag, arity));

  Verdict v = classify(res, env, fuel, depth);
  switch (v.kind) {
    case Verdict::Kind::Unsolvable:
      return decode_value(detail::class_value(v.cls, arity));
    case Verdict::Kind::Unknown:
      return decode_unknown(v.reason);
    case Verdict::Kind::Solvable: {
      ReduceOutcome out = normalize(res, env, fuel);
      if (!out.is_normal_form()) return decode_unknown(Verdict::Reason::FuelExhausted);
      if (alpha_eq(out.term, encode_value(Tv::T, style), env)) return decode_value(Tv::T);
      if (alpha_eq(out.term, encode_value(Tv::F, style), env)) return decode_value(Tv::F);
      if (out.term->kind == TermNode::Kind::Const)
        return decode_value(detail::const_value(out.term->tag, arity));
      throw DecodeError("normal form is not a truth value: " + to_string(out.term));
    }
  }
  return decode_unknown(Verdict::Reason::FuelExhausted);
}

// --- truth tables ---------------------------------------------------------------

enum class Connective { Neg, Conj, Disj, Impl };

inline const char* connective_name(Connective c) {
  switch (c) {
    case Connective::Neg: return "neg";
    case Connective::Conj: return "conj";
    case Connective::Disj: return "disj";
    case Connective::Impl: return "impl";
  }
  return "?";
}

inline std::optional<Connective> connective_parse(const std::string& s) {
  if (s == "neg" || s == "not" || s == "~") return Connective::Neg;
  if (s == "conj" || s == "and" || s == "/\\") return Connective::Conj;
  if (s == "disj" || s == "or" || s == "\\/") return Connective::Disj;
  if (s == "impl" || s == "implies" || s == "->") return Connective::Impl;
  return std::nullopt;
}

inline int connective_arity(Connective c) { return c == Connective::Neg ? 1 : 2; }

inline Term apply_connective(Connective c, const std::vector<Term>& args, Style style) {
  switch (c) {
    case Connective::Neg: return neg(args.at(0), style);
    case Connective::Conj: return conj(args.at(0), args.at(1));
    case Connective::Disj: return disj(args.at(0), args.at(1));
    case Connective::Impl: return impl(args.at(0), args.at(1), style);
  }
  throw PreconditionError("bad connective");
}

struct TruthTable {
  Connective connective;
  int arity;
  Style style;
  std::map<std::vector<Tv>, Tv> cells;

  Tv at(std::initializer_list<Tv> args) const { return cells.at(std::vector<Tv>(args)); }
  bool operator==(const TruthTable&) const = default;
};

// Every cell is computed by decoding the connective applied to encoded
// representatives; an Unknown cell is an error naming the cell.
inline TruthTable truth_table(Connective c, int arity, Style style = Style::Church,
                              const DefEnv& env = DefEnv::standard(), long long fuel = 10000) {
  TruthTable table{c, arity, style, {}};
  const auto& domain = tv_domain(arity);
  int k = connective_arity(c);
  std::vector<Tv> tuple(static_cast<size_t>(k));
  std::function<void(int)> fill = [&](int pos) {
    if (pos == k) {
      std::vector<Term> args;
      for (Tv v : tuple) args.push_back(encode_value(v, style));
      DecodeResult r = decode(apply_connective(c, args, style), arity, style, env, fuel);
      if (!r.is_value()) {
        std::string cell;
        for (Tv v : tuple) cell += std::string(tv_ascii(v)) + " ";
        throw DecodeError("truth table cell did not resolve: " + std::string(connective_name(c)) +
                          " at " + cell);
      }
      table.cells.emplace(tuple, r.value);
      return;
    }
    for (Tv v : domain) {
      tuple[static_cast<size_t>(pos)] = v;
      fill(pos + 1);
    }
  };
  fill(0);
  return table;
}

// Project every cell of a finer table into a smaller arity.
inline TruthTable project_table(const TruthTable& t, int arity) {
  TruthTable out{t.connective, arity, t.style, {}};
  for (const auto& [args, v] : t.cells) {
    std::vector<Tv> pargs;
    bool ok = true;
    for (Tv a : args) {
      auto p = project(a, arity);
      if (!p) { ok = false; break; }
      pargs.push_back(*p);
    }
    if (!ok) continue;
    auto pv = project(v, arity);
    if (!pv) throw DecodeError("cell value does not project");
    // distinct fine cells may collapse onto one coarse cell; their projected
    // values must agree
    auto [it, fresh] = out.cells.emplace(pargs, *pv);
    if (!fresh && it->second != *pv) throw DecodeError("projection is inconsistent");
  }
  return out;
}

// --- if-then-else decomposition --------------------------------------------------

struct IteDecompositionReport {
  struct Entry {
    Tv b0, b1, b2;
    Tv lhs, rhs;
    bool agree;
  };
  std::vector<Entry> entries;
  bool all_agree = true;
};

// For all B0,B1,B2 in {T,⊥,F}: if B0 then B1 else B2 equals
// (B0 ∧ B1) ∨ (¬B0 ∧ B2), both sides evaluated at arity 3.
inline IteDecompositionReport check_ite_decomposition(const DefEnv& env = DefEnv::standard(),
                                                      long long fuel = 10000,
                                                      Style style = Style::Church) {
  IteDecompositionReport report;
  const std::vector<Tv> domain{Tv::T, Tv::Bot, Tv::F};
  for (Tv b0 : domain)
    for (Tv b1 : domain)
      for (Tv b2 : domain) {
        Term e0 = encode_value(b0, style), e1 = encode_value(b1, style), e2 = encode_value(b2, style);
        DecodeResult lhs = decode(ite(e0, e1, e2), 3, style, env, fuel);
        DecodeResult rhs = decode(disj(conj(e0, e1), conj(neg(e0, style), e2)), 3, style, env, fuel);
        if (!lhs.is_value() || !rhs.is_value())
          throw DecodeError("ite decomposition cell did not resolve");
        bool agree = lhs.value == rhs.value;
        report.entries.push_back({b0, b1, b2, lhs.value, rhs.value, agree});
        report.all_agree = report.all_agree && agree;
      }
  return report;
}

// --- rendering ------------------------------------------------------------------

inline const char* connective_symbol(Connective c) {
  switch (c) {
    case Connective::Neg: return "¬";       // ¬
    case Connective::Conj: return "∧";      // ∧
    case Connective::Disj: return "∨";      // ∨
    case Connective::Impl: return "→";      // →
  }
  return "?";
}

inline std::string render_table(const TruthTable& t) {
  const auto& domain = tv_domain(t.arity);
  auto pad = [](const std::string& s, size_t w) {
    std::string r = s;
    // ⊥ glyphs are 3 UTF-8 bytes but one column wide; pad by display width
    size_t display = 0;
    for (size_t i = 0; i < s.size();) {
      unsigned char c = static_cast<unsigned char>(s[i]);
      i += c < 0x80 ? 1 : c < 0xE0 ? 2 : c < 0xF0 ? 3 : 4;
      ++display;
    }
    while (display++ < w) r += ' ';
    return r;
  };
  size_t w = t.arity >= 4 ? 4 : 2;
  std::string rule(w, '-');
  std::string out;
  if (connective_arity(t.connective) == 1) {
    out += pad(connective_symbol(t.connective), w) + "|\n";
    out += rule + "+" + rule + "-\n";
    for (Tv a : domain)
      out += pad(tv_pretty(a), w) + "| " + tv_pretty(t.at({a})) + "\n";
    return out;
  }
  out += pad(connective_symbol(t.connective), w) + "|";
  for (Tv b : domain) out += " " + pad(tv_pretty(b), w);
  out += "\n" + rule + "+";
  for (size_t i = 0; i < domain.size(); ++i) out += std::string(w + 1, '-');
  out += "\n";
  for (Tv a : domain) {
    out += pad(tv_pretty(a), w) + "|";
    for (Tv b : domain) out += " " + pad(tv_pretty(t.at({a, b})), w);
    out += "\n";
  }
  return out;
}

}  // namespace mccarthy
