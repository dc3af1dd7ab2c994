// JSON views of the workbench's results. Key order is alphabetical (nlohmann
// objects are sorted), so dumps are deterministic.

#pragma once

#include <json.hpp>

#include "axioms.hpp"
#include "classify.hpp"
#include "lambdai.hpp"
#include "logic.hpp"
#include "prop.hpp"
#include "reduce.hpp"
#include "trees.hpp"

namespace mccarthy {

using json = nlohmann::json;

inline json path_json(const Path& p) {
  json a = json::array();
  for (Step s : p) a.push_back(step_name(s));
  return a;
}

inline json term_json(const Term& t) {
  switch (t->kind) {
    case TermNode::Kind::Var: return {{"kind", "var"}, {"name", t->name}};
    case TermNode::Kind::Ref: return {{"kind", "ref"}, {"name", t->name}};
    case TermNode::Kind::Const: return {{"kind", "const"}, {"tag", bot_tag_ascii(t->tag)}};
    case TermNode::Kind::Lam:
      return {{"kind", "lam"}, {"binder", t->name}, {"body", term_json(t->left)}};
    case TermNode::Kind::App:
      return {{"kind", "app"}, {"fun", term_json(t->left)}, {"arg", term_json(t->right)}};
  }
  return nullptr;
}

inline json outcome_json(const ReduceOutcome& o) {
  json j{{"outcome", outcome_name(o.kind)}, {"steps", o.steps}, {"term", to_string(o.term)}};
  if (o.kind == ReduceOutcome::Kind::CycleDetected) j["loop_length"] = o.loop_length;
  return j;
}

inline json trace_json(const Trace& t) {
  json steps = json::array();
  for (const auto& e : t.steps)
    steps.push_back({{"term", to_string(e.term)}, {"redex_path", path_json(e.redex)}});
  return {{"steps", steps}, {"final", t.final_term ? to_string(t.final_term) : ""}};
}

inline json evidence_json(const Evidence& e) {
  return {{"strategy", strategy_name(e.strategy)},
          {"witness", e.witness ? to_string(e.witness) : ""},
          {"loop_length", e.loop_length},
          {"path", path_json(e.path)}};
}

inline json verdict_json(const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::Solvable: {
      json binders = json::array();
      for (const auto& b : v.binders) binders.push_back(b);
      return {{"verdict", "solvable"},
              {"binders", binders},
              {"head", v.head},
              {"args", v.arg_count},
              {"steps", v.steps}};
    }
    case Verdict::Kind::Unsolvable:
      return {{"verdict", "unsolvable"},
              {"class", class_name(v.cls)},
              {"evidence", evidence_json(v.evidence)},
              {"steps", v.steps}};
    case Verdict::Kind::Unknown:
      return {{"verdict", "unknown"},
              {"reason", v.reason == Verdict::Reason::FuelExhausted ? "fuel-exhausted"
                                                                    : "depth-exhausted"},
              {"steps", v.steps}};
  }
  return nullptr;
}

inline json tree_json(const TreeNode& t) {
  switch (t.kind) {
    case TreeNode::Kind::Bot: return {{"kind", "bot"}, {"tag", bot_tag_ascii(t.tag)}};
    case TreeNode::Kind::Cut: return {{"kind", "cut"}, {"reason", cut_reason_name(t.reason)}};
    case TreeNode::Kind::LamStream: {
      json binders = json::array();
      for (const auto& b : t.binders) binders.push_back(b);
      return {{"kind", "lam_stream"}, {"binders", binders}, {"cont", tree_json(t.children[0])}};
    }
    case TreeNode::Kind::App:
      return {{"kind", "app"},
              {"fun", tree_json(t.children[0])},
              {"arg", tree_json(t.children[1])}};
    case TreeNode::Kind::Head: {
      json binders = json::array();
      for (const auto& b : t.binders) binders.push_back(b);
      json children = json::array();
      for (const auto& c : t.children) children.push_back(tree_json(c));
      return {{"kind", "head"}, {"binders", binders}, {"var", t.head_var}, {"children", children}};
    }
  }
  return nullptr;
}

inline json table_json(const TruthTable& t) {
  json rows = json::array();
  for (const auto& [args, v] : t.cells) {
    json a = json::array();
    for (Tv x : args) a.push_back(tv_ascii(x));
    rows.push_back({{"args", a}, {"value", tv_ascii(v)}});
  }
  return {{"connective", connective_name(t.connective)},
          {"arity", t.arity},
          {"style", style_name(t.style)},
          {"cells", rows}};
}

inline json decode_json(const DecodeResult& r) {
  if (r.is_value()) return {{"value", tv_ascii(r.value)}};
  return {{"value", nullptr},
          {"unknown", r.reason == Verdict::Reason::FuelExhausted ? "fuel-exhausted"
                                                                 : "depth-exhausted"}};
}

inline json eq_check_json(const Equation& eq, int arity, const EqCheck& r) {
  json j{{"axiom", eq.name}, {"arity", arity}, {"assignments", r.assignments_checked}};
  if (r.holds()) {
    j["status"] = "holds";
  } else {
    j["status"] = "counterexample";
    json a = json::object();
    for (const auto& [k, v] : r.assignment) a[k] = tv_ascii(v);
    j["assignment"] = a;
    j["lhs"] = tv_ascii(r.lhs_value);
    j["rhs"] = tv_ascii(r.rhs_value);
  }
  return j;
}

inline json report_json(const CheckReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    json j = eq_check_json(e.equation, e.arity, e.result);
    j["expected_to_hold"] = e.expected_to_hold;
    entries.push_back(j);
  }
  return {{"entries", entries},
          {"held", report.held},
          {"failed", report.failed},
          {"all_as_expected", report.all_as_expected}};
}

inline json violations_json(const std::vector<LambdaIViolation>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back({{"binder", v.binder}, {"path", path_json(v.path)}});
  return a;
}

}  // namespace mccarthy
