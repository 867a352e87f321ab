#pragma once

// Command-line front end.  Every invocation prints one JSON object
// {"ok": bool, "result": ..., "error": string?} and returns the exit code:
// 0 holds, 1 does not hold, 2 input error, 3 fuel or budget exhausted,
// 4 cycle found.

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lambdadelta/lambdadelta.hpp"

namespace lambdadelta::cli {

using nlohmann::json;

enum Exit : int { kHolds = 0, kFails = 1, kInput = 2, kExhausted = 3, kCycle = 4 };

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  int code = kHolds;
  json result;
  std::string error;
};

// key=value lines; '#' starts a comment.  Known keys: c, D, fuel, budget.
inline void read_config(const std::string& path, Params& p) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError(path + ":" + std::to_string(lineno) + ": expected key=value");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    std::size_t n = 0;
    try {
      std::size_t used = 0;
      n = std::stoull(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw InputError(path + ":" + std::to_string(lineno) + ": not a natural number: " + value);
    }
    if (key == "c") {
      p.c = n;
    } else if (key == "D") {
      p.D = n;
    } else if (key == "fuel") {
      p.fuel = n;
    } else if (key == "budget") {
      p.budget = n;
    } else {
      throw InputError(path + ":" + std::to_string(lineno) + ": unknown key " + key);
    }
  }
}

inline json certificate_json(const Certificate<Term>& c) {
  json j{{"status", to_string(c.status)}, {"nodes", c.nodes}, {"edges", c.edges}};
  if (c.ok()) j["max_depth"] = c.max_depth;
  if (c.status == CertStatus::Cycle) {
    json cycle = json::array();
    for (const auto& t : c.cycle) cycle.push_back(print_term(t));
    j["cycle"] = cycle;
  }
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j;
}

inline json certificate_json(const Certificate<Closure>& c) {
  json j{{"status", to_string(c.status)}, {"nodes", c.nodes}, {"edges", c.edges}};
  if (c.ok()) j["max_depth"] = c.max_depth;
  if (c.status == CertStatus::Cycle) {
    json cycle = json::array();
    for (const auto& x : c.cycle) cycle.push_back(print_closure(x));
    j["cycle"] = cycle;
  }
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j;
}

inline int certificate_code(CertStatus s) {
  switch (s) {
    case CertStatus::Ok: return kHolds;
    case CertStatus::Cycle: return kCycle;
    case CertStatus::Budget: return kExhausted;
  }
  return kExhausted;
}

inline json terms_json(const std::vector<Term>& ts) {
  json out = json::array();
  for (const auto& t : ts) out.push_back(print_term(t));
  return out;
}

inline int run(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Reference kernel for the lambda-delta calculus", "lambdadelta"};
  app.require_subcommand(1);
  app.fallthrough();

  Params p;
  std::string env_text = "[]";
  std::string config_path;
  std::optional<std::size_t> opt_c, opt_D, opt_fuel, opt_budget;
  app.add_option("--env", env_text, "environment, outermost entry first");
  app.add_option("--c", opt_c, "sort hierarchy step (next(k) = k + c), at least 1");
  app.add_option("--D", opt_D, "degree of sort 0");
  app.add_option("--fuel", opt_fuel, "normalization fuel");
  app.add_option("--budget", opt_budget, "node and set-size budget");
  app.add_option("--config", config_path, "key=value file with c, D, fuel, budget");

  std::string term_text;
  std::string term2_text;
  std::size_t n = 0;
  std::size_t level = 0;
  bool extended = false;
  std::string graph_path;
  std::string env2_text;
  std::string suite;
  std::size_t size = 4;
  std::size_t envlen = 2;
  std::size_t maxsort = 1;
  unsigned workers = 0;

  auto* parse = app.add_subcommand("parse", "parse and print a term in an environment");
  parse->add_option("term", term_text)->required();
  auto* check = app.add_subcommand("check", "decide stratified validity");
  check->add_option("term", term_text)->required();
  auto* arity = app.add_subcommand("arity", "infer the atomic arity");
  arity->add_option("term", term_text)->required();
  auto* degree = app.add_subcommand("degree", "assign the degree");
  degree->add_option("term", term_text)->required();
  auto* stype = app.add_subcommand("stype", "n-iterated static type");
  stype->add_option("--n", n)->required();
  stype->add_option("term", term_text)->required();
  auto* nf = app.add_subcommand("nf", "normal form");
  nf->add_option("term", term_text)->required();
  auto* reducts = app.add_subcommand("reducts", "one-step parallel reducts");
  reducts->add_flag("--extended", extended, "use extended reduction");
  reducts->add_option("term", term_text)->required();
  auto* conv_cmd = app.add_subcommand("conv", "decide conversion");
  conv_cmd->add_option("term1", term_text)->required();
  conv_cmd->add_option("term2", term2_text)->required();
  auto* lleq = app.add_subcommand("lleq", "decide lazy equivalence of two environments");
  lleq->add_option("--l", level)->required();
  lleq->add_option("--t", term_text)->required();
  lleq->add_option("env1", env_text)->required();
  lleq->add_option("env2", env2_text)->required();
  auto* csx = app.add_subcommand("csx", "certify strong normalization for extended reduction");
  csx->add_option("term", term_text)->required();
  auto* bigtree = app.add_subcommand("bigtree", "certify strong qrst-normalization");
  bigtree->add_option("--graph", graph_path, "write the traversed edges to this file");
  bigtree->add_option("term", term_text)->required();
  auto* props = app.add_subcommand("props", "run a property suite over a bounded universe");
  props->add_option("--suite", suite)->required();
  props->add_option("--size", size, "largest term size");
  props->add_option("--envlen", envlen, "longest environment");
  props->add_option("--maxsort", maxsort, "largest sort index");
  props->add_option("--workers", workers, "worker threads (0: one per hardware thread)");

  Outcome o;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (!config_path.empty()) read_config(config_path, p);
    if (opt_c) p.c = *opt_c;
    if (opt_D) p.D = *opt_D;
    if (opt_fuel) p.fuel = *opt_fuel;
    if (opt_budget) p.budget = *opt_budget;
    if (p.c == 0) throw InputError("c must be at least 1");

    const Env env = parse_env(env_text);
    auto term = [&] { return parse_term(term_text); };

    if (parse->parsed()) {
      const Term t = term();
      o.result = {{"env", print_env(env)}, {"term", print_term(t)}, {"size", t.size()}};
    } else if (check->parsed()) {
      const auto rep = snv_check(p, env, term());
      o.result = {{"valid", rep.valid}};
      if (rep.failure) {
        o.result["position"] = rep.failure->position;
        o.result["rule"] = rep.failure->rule;
        o.result["reason"] = rep.failure->reason;
        o.code = rep.failure->exhausted == Exhaustion::None ? kFails : kExhausted;
      }
    } else if (arity->parsed()) {
      const auto a = aaa(env, term());
      if (a) {
        o.result = print_arity(*a);
      } else {
        o.code = kFails;
        o.result = nullptr;
        o.error = a.error().reason + " at " + a.error().position;
      }
    } else if (degree->parsed()) {
      const auto d = da(p, env, term());
      if (d) {
        o.result = *d;
      } else {
        o.code = kFails;
        o.result = nullptr;
        o.error = d.error().reason;
      }
    } else if (stype->parsed()) {
      const auto u = lstas(p, env, term(), n);
      if (u) {
        o.result = print_term(*u);
      } else {
        o.code = kFails;
        o.result = nullptr;
        o.error = u.error().reason;
      }
    } else if (nf->parsed()) {
      o.result = print_term(normalize(env, term(), p.fuel));
    } else if (reducts->parsed()) {
      const Term t = term();
      o.result = terms_json(extended ? cpx_reducts(p, env, t) : cpr_reducts(env, t, p.budget));
    } else if (conv_cmd->parsed()) {
      const bool c = conv(env, term(), parse_term(term2_text), p.fuel);
      o.result = c;
      if (!c) o.code = kFails;
    } else if (lleq->parsed()) {
      const bool h = lleq_holds(level, term(), env, parse_env(env2_text));
      o.result = h;
      if (!h) o.code = kFails;
    } else if (csx->parsed()) {
      const auto rep = csx_certify(p, env, term());
      o.result = certificate_json(rep);
      o.code = certificate_code(rep.status);
    } else if (bigtree->parsed()) {
      const Term t = term();
      std::ofstream graph;
      if (!graph_path.empty()) {
        graph.open(graph_path);
        if (!graph) throw InputError("cannot write " + graph_path);
      }
      ClosureEdgeSink sink;
      if (graph.is_open()) sink = [&](const Closure& a, const Closure& b) { graph << edge_line(a, b) << '\n'; };
      const auto rep = fsb_certify(p, env, t, sink);
      o.result = certificate_json(rep);
      o.code = certificate_code(rep.status);
    } else if (props->parsed()) {
      const auto& table = suite_table();
      const auto it = table.find(suite);
      if (it == table.end()) throw InputError("unknown suite " + suite);
      SuiteOptions opt;
      opt.bounds = UniverseBounds{size, envlen, maxsort};
      opt.params = p;
      opt.workers = workers;
      const auto r = it->second(opt);
      o.result = {{"suite", r.name},
                  {"closures", r.closures},
                  {"checked", r.checked},
                  {"counterexamples", r.counterexamples}};
      if (!r.passed()) o.code = kFails;
    }
  } catch (const CLI::CallForHelp&) {
    o.result = app.help();
  } catch (const CLI::ParseError& e) {
    o.code = kInput;
    o.error = e.what();
  } catch (const SyntaxError& e) {
    o.code = kInput;
    o.error = std::string("syntax error: ") + e.what();
  } catch (const InputError& e) {
    o.code = kInput;
    o.error = e.what();
  } catch (const BudgetExceeded& e) {
    o.code = kExhausted;
    o.error = e.what();
  } catch (const Divergence& e) {
    o.code = kExhausted;
    o.error = e.what();
  }

  json doc{{"ok", o.code == kHolds}, {"result", o.result}};
  if (!o.error.empty()) doc["error"] = o.error;
  out << doc.dump() << '\n';
  return o.code;
}

}  // namespace lambdadelta::cli
