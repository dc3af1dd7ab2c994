// Reference truth tables for the golden comparisons: the published tables of
// two-valued Boolean logic, McCarthy's left-sequential three-valued logic and
// the left-sequential four- and five-valued logics. Cell values are listed
// row-major in the domain enumeration order of tv_domain().
//
// The published four-valued ∧ table prints a five-valued symbol (⊥IL) in the
// cell T ∧ ⊥D; that cell is flagged as a suspected typo and the comparison
// requires the computed value ⊥D there instead of silently matching.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logic.hpp"

namespace mccarthy {

struct GoldenTable {
  Connective connective;
  int arity;
  std::vector<Tv> values;  // row-major over tv_domain(arity)^k
};

struct GoldenCellNote {
  Connective connective;
  int arity;
  std::vector<Tv> args;
  std::string printed;  // what the published figure shows
};

namespace golden {

inline const std::vector<GoldenTable>& tables() {
  using enum Tv;
  static const std::vector<GoldenTable> t{
      // Figure: two-valued Boolean logic
      {Connective::Neg, 2, {F, T}},
      {Connective::Conj, 2, {T, F, F, F}},
      {Connective::Disj, 2, {T, T, T, F}},
      {Connective::Impl, 2, {T, F, T, T}},
      // Figure: McCarthy's left-sequential three-valued logic
      {Connective::Neg, 3, {F, T, Bot}},
      {Connective::Conj, 3, {T, F, Bot, F, F, F, Bot, Bot, Bot}},
      {Connective::Disj, 3, {T, T, T, T, F, Bot, Bot, Bot, Bot}},
      {Connective::Impl, 3, {T, F, Bot, T, T, T, Bot, Bot, Bot}},
      // Figure: left-sequential four-valued logic (¬, ∧, ∨)
      {Connective::Neg, 4, {F, T, BotHA, BotD}},
      {Connective::Conj, 4,
       {T, F, BotHA, BotD,
        F, F, F, F,
        BotHA, BotHA, BotHA, BotHA,
        BotD, BotD, BotD, BotD}},
      {Connective::Disj, 4,
       {T, T, T, T,
        T, F, BotHA, BotD,
        BotHA, BotHA, BotHA, BotHA,
        BotD, BotD, BotD, BotD}},
      // Figure: left-sequential five-valued logic (¬, ∧, ∨)
      {Connective::Neg, 5, {F, T, BotHA, BotIL, BotO}},
      {Connective::Conj, 5,
       {T, F, BotHA, BotIL, BotO,
        F, F, F, F, F,
        BotHA, BotHA, BotHA, BotHA, BotHA,
        BotIL, BotIL, BotIL, BotIL, BotIL,
        BotO, BotO, BotO, BotO, BotO}},
      {Connective::Disj, 5,
       {T, T, T, T, T,
        T, F, BotHA, BotIL, BotO,
        BotHA, BotHA, BotHA, BotHA, BotHA,
        BotIL, BotIL, BotIL, BotIL, BotIL,
        BotO, BotO, BotO, BotO, BotO}},
  };
  return t;
}

inline const GoldenCellNote& flagged_typo_cell() {
  static const GoldenCellNote note{Connective::Conj, 4, {Tv::T, Tv::BotD}, "⊥IL"};
  return note;
}

inline std::optional<GoldenTable> table_for(Connective c, int arity) {
  for (const auto& t : tables())
    if (t.connective == c && t.arity == arity) return t;
  return std::nullopt;
}

// Compare a computed table against its golden counterpart. Returns the list
// of mismatching cells as rendered strings; empty means cell-for-cell match.
inline std::vector<std::string> compare(const TruthTable& computed) {
  std::vector<std::string> mismatches;
  auto g = table_for(computed.connective, computed.arity);
  if (!g) {
    mismatches.push_back("no golden table for this connective/arity");
    return mismatches;
  }
  const auto& domain = tv_domain(computed.arity);
  size_t idx = 0;
  int k = connective_arity(computed.connective);
  std::vector<Tv> tuple(static_cast<size_t>(k));
  std::function<void(int)> walk = [&](int pos) {
    if (pos == k) {
      Tv expected = g->values.at(idx++);
      Tv actual = computed.cells.at(tuple);
      if (actual != expected) {
        std::string cell = connective_name(computed.connective);
        for (Tv v : tuple) cell += std::string(" ") + tv_ascii(v);
        mismatches.push_back(cell + ": computed " + tv_ascii(actual) + ", table has " + tv_ascii(expected));
      }
      return;
    }
    for (Tv v : domain) {
      tuple[static_cast<size_t>(pos)] = v;
      walk(pos + 1);
    }
  };
  walk(0);
  return mismatches;
}

}  // namespace golden
}  // namespace mccarthy
