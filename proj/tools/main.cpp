// Command line front end for the λ-calculus workbench: term reduction and
// classification, tree prefixes, truth tables, axiom suites, proposition
// evaluation, λI checks and full reproduction of the published results.
//
// Exit codes: 0 success, 1 golden mismatch, 2 usage error, 3 a definite
// answer was required but the bounded engines returned Unknown.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mccarthy/axioms.hpp"
#include "mccarthy/json_out.hpp"
#include "mccarthy/lambdai.hpp"
#include "mccarthy/parser.hpp"
#include "mccarthy/prop.hpp"
#include "mccarthy/reproduce.hpp"
#include "mccarthy/trees.hpp"

using namespace mccarthy;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitGoldenMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnknown = 3;

struct CommonOpts {
  long long fuel = 10000;
  long long depth = 64;
  long long tree_depth = 16;
  int arity = 3;
  std::string style_name = "church";
  std::string file;
  bool json = false;
  bool trace = false;

  Style style() const { return style_name == "lambda-i" ? Style::LambdaI : Style::Church; }
};

// Reads the term either from the positional argument or, with --file, from a
// definition script whose final line is the query.
struct TermInput {
  DefEnv env;
  Term term;
};

TermInput load_term(const CommonOpts& opts, const std::string& term_text) {
  if (!opts.file.empty()) {
    std::ifstream in(opts.file);
    if (!in) throw ParseError("cannot open file: " + opts.file, 0);
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto [env, term] = parse_script(buffer.str());
    return {std::move(env), term};
  }
  return {DefEnv(), parse_term(term_text)};
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_arity = false, bool with_style = false,
                bool with_tree_depth = false) {
  cmd->add_option("--fuel", opts.fuel, "reduction step budget")->capture_default_str();
  cmd->add_option("--depth", with_tree_depth ? opts.tree_depth : opts.depth,
                  "depth budget")->capture_default_str();
  if (with_arity)
    cmd->add_option("--arity", opts.arity, "logic arity (2, 3, 4 or 5)")
        ->check(CLI::IsMember({2, 3, 4, 5}))
        ->capture_default_str();
  if (with_style)
    cmd->add_option("--style", opts.style_name, "boolean encoding")
        ->check(CLI::IsMember({"church", "lambda-i"}))
        ->capture_default_str();
  cmd->add_flag("--json", opts.json, "machine readable output");
}

int run_reduce(const CommonOpts& opts, const std::string& text) {
  TermInput input = load_term(opts, text);
  Trace trace;
  ReduceOutcome out = normalize(input.term, input.env, opts.fuel, opts.trace ? &trace : nullptr);
  if (opts.json) {
    json j = outcome_json(out);
    if (opts.trace) j["trace"] = trace_json(trace);
    std::cout << j.dump(2) << "\n";
  } else {
    if (opts.trace) std::cout << render_trace(trace);
    std::cout << outcome_name(out.kind) << " after " << out.steps
              << " steps: " << to_string(out.term) << "\n";
    if (out.kind == ReduceOutcome::Kind::CycleDetected)
      std::cout << "loop length " << out.loop_length << "\n";
  }
  return kExitOk;
}

int run_classify(const CommonOpts& opts, const std::string& text) {
  TermInput input = load_term(opts, text);
  Verdict v = classify(input.term, input.env, opts.fuel, opts.depth);
  if (opts.json) {
    std::cout << verdict_json(v).dump(2) << "\n";
  } else {
    switch (v.kind) {
      case Verdict::Kind::Solvable: {
        std::cout << "Solvable: head " << v.head << " under " << v.binders.size()
                  << " binders, " << v.arg_count << " args (" << v.steps << " steps)\n";
        break;
      }
      case Verdict::Kind::Unsolvable:
        std::cout << "Unsolvable(" << class_name(v.cls) << "): " << strategy_name(v.evidence.strategy)
                  << ", witness " << to_string(v.evidence.witness) << ", loop length "
                  << v.evidence.loop_length << " (" << v.steps << " steps)\n";
        break;
      case Verdict::Kind::Unknown:
        std::cout << "Unknown("
                  << (v.reason == Verdict::Reason::FuelExhausted ? "fuel" : "depth")
                  << " exhausted after " << v.steps << " steps)\n";
        break;
    }
  }
  return v.kind == Verdict::Kind::Unknown ? kExitUnknown : kExitOk;
}

int run_tree(const CommonOpts& opts, const std::string& text, const std::string& kind) {
  TermInput input = load_term(opts, text);
  TreeNode t = kind == "bohm" ? bohm_tree(input.term, opts.tree_depth, opts.fuel, input.env)
               : kind == "levy-longo"
                   ? levy_longo_tree(input.term, opts.tree_depth, opts.fuel, input.env)
                   : berarducci_tree(input.term, opts.tree_depth, opts.fuel, input.env);
  if (opts.json)
    std::cout << tree_json(t).dump(2) << "\n";
  else
    std::cout << render_tree(t) << "\n";
  return kExitOk;
}

int run_table(const CommonOpts& opts, const std::string& conn_name) {
  auto c = connective_parse(conn_name);
  if (!c) {
    std::cerr << "unknown connective: " << conn_name << "\n";
    return kExitUsage;
  }
  try {
    TruthTable t = truth_table(*c, opts.arity, opts.style(), DefEnv::standard(), opts.fuel);
    if (opts.json)
      std::cout << table_json(t).dump(2) << "\n";
    else
      std::cout << render_table(t);
  } catch (const DecodeError& e) {
    std::cerr << e.what() << "\n";
    return kExitUnknown;
  }
  return kExitOk;
}

int run_axioms(const CommonOpts& opts, const std::string& which) {
  bool ok = true;
  json out = json::object();
  if (which == "guzman" || which == "all") {
    CheckReport r = guzman_squier_suite(opts.style(), DefEnv::standard(), opts.fuel);
    ok = ok && r.all_as_expected;
    if (opts.json)
      out["guzman_squier"] = report_json(r);
    else
      std::cout << "Guzman-Squier (three-valued):\n" << render_report(r) << "\n";
  }
  if (which == "bvdp" || which == "all") {
    CheckReport r = bergstra_vdpol_suite(opts.style(), DefEnv::standard(), opts.fuel);
    ok = ok && r.all_as_expected;
    if (opts.json)
      out["bergstra_vdpol"] = report_json(r);
    else
      std::cout << "Bergstra-Van de Pol (four- and five-valued):\n" << render_report(r) << "\n";
  }
  if (opts.json) std::cout << out.dump(2) << "\n";
  return ok ? kExitOk : kExitGoldenMismatch;
}

Assignment parse_assignment(const std::string& text) {
  Assignment out;
  std::stringstream ss(text);
  std::string pair;
  while (std::getline(ss, pair, ',')) {
    if (pair.empty()) continue;
    size_t eq = pair.find('=');
    if (eq == std::string::npos) throw ParseError("expected name=value in --assign", 0);
    std::string name = pair.substr(0, eq);
    auto v = tv_parse(pair.substr(eq + 1));
    if (!v) throw ParseError("unknown truth value in --assign: " + pair.substr(eq + 1), 0);
    out[name] = *v;
  }
  return out;
}

int run_prop_eval(const CommonOpts& opts, const std::string& text, const std::string& assign) {
  ParsedProp p = parse_prop(text);
  Assignment assignment = parse_assignment(assign);
  DecodeResult r = eval_prop(p.main, p.recs, assignment, opts.arity, opts.style(),
                             DefEnv::standard(), opts.fuel, opts.depth);
  if (opts.json) {
    json j = decode_json(r);
    if (opts.arity == 3) j["direct"] = tv_ascii(direct_eval(p.main, p.recs, assignment));
    std::cout << j.dump(2) << "\n";
  } else if (r.is_value()) {
    std::cout << tv_pretty(r.value) << "\n";
  } else {
    std::cout << "Unknown ("
              << (r.reason == Verdict::Reason::FuelExhausted ? "fuel" : "depth")
              << " exhausted)\n";
  }
  return r.is_value() ? kExitOk : kExitUnknown;
}

int run_lambdai_check(const CommonOpts& opts, const std::string& text) {
  TermInput input = load_term(opts, text);
  auto violations = validate_lambda_i(input.term, input.env);
  if (opts.json) {
    std::cout << json{{"lambda_i", violations.empty()}, {"violations", violations_json(violations)}}
                     .dump(2)
              << "\n";
  } else if (violations.empty()) {
    std::cout << "valid lambda-I term\n";
  } else {
    for (const auto& v : violations) {
      std::cout << "binder '" << v.binder << "' does not occur in its body (at";
      for (Step s : v.path) std::cout << " " << step_name(s);
      std::cout << (v.path.empty() ? " root" : "") << ")\n";
    }
  }
  return kExitOk;
}

int run_lambdai_normalize(const CommonOpts& opts, const std::string& text) {
  TermInput input = load_term(opts, text);
  auto violations = validate_lambda_i(input.term, input.env);
  BotNormalizeResult r = bot_normalize_i(input.term, input.env, opts.fuel);
  if (opts.json) {
    json j{{"lambda_i", violations.empty()},
           {"violations", violations_json(violations)},
           {"steps", r.steps}};
    j["result"] = r.done() ? json(to_string(r.term)) : json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else {
    if (!violations.empty())
      std::cout << "note: not a lambda-I term (" << violations.size() << " violation"
                << (violations.size() == 1 ? "" : "s") << ")\n";
    if (r.done())
      std::cout << to_string(r.term) << "\n";
    else
      std::cout << "Unknown (no normal form found and no divergence certificate)\n";
  }
  return r.done() ? kExitOk : kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"left-sequential many-valued logic workbench over the lambda calculus"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string term_text, conn_name, which_axioms = "all", prop_text, assign_text;

  auto* parse_cmd = app.add_subcommand("parse", "parse a term and print it back");
  parse_cmd->add_option("term", term_text, "the term")->required();
  add_common(parse_cmd, opts);

  auto* reduce_cmd = app.add_subcommand("reduce", "normal-order normalization");
  reduce_cmd->add_option("term", term_text, "the term");
  reduce_cmd->add_option("--file", opts.file, "definition script ending in a query");
  reduce_cmd->add_flag("--trace", opts.trace, "print every contraction");
  add_common(reduce_cmd, opts);

  auto* classify_cmd = app.add_subcommand("classify", "solvability and HA/IL/O classification");
  classify_cmd->add_option("term", term_text, "the term");
  classify_cmd->add_option("--file", opts.file, "definition script ending in a query");
  add_common(classify_cmd, opts);

  for (const char* tree : {"bohm", "levy-longo", "berarducci"}) {
    auto* cmd = app.add_subcommand(tree, std::string(tree) + " tree prefix");
    cmd->add_option("term", term_text, "the term");
    cmd->add_option("--file", opts.file, "definition script ending in a query");
    add_common(cmd, opts, false, false, true);
  }

  auto* table_cmd = app.add_subcommand("table", "truth table computed through the engine");
  table_cmd->add_option("connective", conn_name, "neg, conj, disj or impl")->required();
  add_common(table_cmd, opts, true, true);

  auto* axioms_cmd = app.add_subcommand("axioms", "axiom suites by exhaustive evaluation");
  axioms_cmd->add_option("which", which_axioms, "guzman, bvdp or all")
      ->check(CLI::IsMember({"guzman", "bvdp", "all"}));
  add_common(axioms_cmd, opts, false, true);

  auto* prop_cmd = app.add_subcommand("prop", "proposition evaluation");
  auto* prop_eval = prop_cmd->add_subcommand("eval", "evaluate a proposition");
  prop_eval->add_option("proposition", prop_text, "e.g. \"rec X = ~X in X\"")->required();
  prop_eval->add_option("--assign", assign_text, "variable assignment a=T,b=F");
  add_common(prop_eval, opts, true, true);

  auto* lambdai_cmd = app.add_subcommand("lambdai", "lambda-I calculus support");
  auto* li_check = lambdai_cmd->add_subcommand("check", "binder-occurrence validation");
  li_check->add_option("term", term_text, "the term")->required();
  add_common(li_check, opts);
  auto* li_norm = lambdai_cmd->add_subcommand("normalize", "beta-bot normalization");
  li_norm->add_option("term", term_text, "the term")->required();
  add_common(li_norm, opts);

  auto* russell_cmd = app.add_subcommand("russell", "the paradox, resolved three-valued");
  add_common(russell_cmd, opts);

  auto* repro_cmd = app.add_subcommand("reproduce-paper",
                                       "recompute all published tables, axiom checks and demos");
  repro_cmd->add_option("--fuel", opts.fuel, "reduction step budget")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (parse_cmd->parsed()) {
      Term t = parse_term(term_text);
      if (opts.json)
        std::cout << json{{"term", term_json(t)}, {"printed", to_string(t)}}.dump(2) << "\n";
      else
        std::cout << to_string(t) << "\n";
      return kExitOk;
    }
    if (reduce_cmd->parsed()) return run_reduce(opts, term_text);
    if (classify_cmd->parsed()) return run_classify(opts, term_text);
    for (const char* tree : {"bohm", "levy-longo", "berarducci"})
      if (app.get_subcommand(tree)->parsed()) return run_tree(opts, term_text, tree);
    if (table_cmd->parsed()) return run_table(opts, conn_name);
    if (axioms_cmd->parsed()) return run_axioms(opts, which_axioms);
    if (prop_cmd->parsed()) {
      if (!prop_eval->parsed()) {
        std::cerr << "usage: prop eval \"<proposition>\"\n";
        return kExitUsage;
      }
      return run_prop_eval(opts, prop_text, assign_text);
    }
    if (lambdai_cmd->parsed()) {
      if (li_check->parsed()) return run_lambdai_check(opts, term_text);
      if (li_norm->parsed()) return run_lambdai_normalize(opts, term_text);
      std::cerr << "usage: lambdai check|normalize \"<term>\"\n";
      return kExitUsage;
    }
    if (russell_cmd->parsed()) {
      RussellReport r = russell_demo(DefEnv::standard(), opts.fuel);
      if (opts.json) {
        json j{{"term", to_string(r.term)},
               {"verdict", verdict_json(r.verdict)},
               {"value", tv_ascii(r.value)},
               {"trace", r.trace}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << render_russell(r);
      }
      return kExitOk;
    }
    if (repro_cmd->parsed()) {
      bool ok = reproduce_paper(std::cout, DefEnv::standard(), opts.fuel);
      return ok ? kExitOk : kExitGoldenMismatch;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResolveError& e) {
    std::cerr << "resolution error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DecodeError& e) {
    std::cerr << "decode error: " << e.what() << "\n";
    return kExitUnknown;
  }
  return kExitUsage;
}
