#pragma once

// Exhaustive property suites over a bounded universe of closures.  Each suite
// states one metatheorem as a check on a single closure and reports every
// closure where the check fails (or could not be completed).

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "lambdadelta/arity.hpp"
#include "lambdadelta/bigtree.hpp"
#include "lambdadelta/extended.hpp"
#include "lambdadelta/reduction.hpp"
#include "lambdadelta/statics.hpp"
#include "lambdadelta/syntax.hpp"
#include "lambdadelta/validity.hpp"

namespace lambdadelta {

struct SuiteResult {
  std::string name;
  std::size_t closures = 0;  // closures enumerated
  std::size_t checked = 0;   // closures the property applies to
  std::vector<std::string> counterexamples;  // sorted

  bool passed() const { return counterexamples.empty(); }
};

struct SuiteOptions {
  UniverseBounds bounds{4, 2, 1};
  Params params{};
  unsigned workers = 0;       // 0: one per hardware thread
  std::size_t oracle_steps = 4;
};

namespace detail {

// Per-closure outcome: not applicable, passed, or failed with a message.
struct Verdict {
  bool applicable = false;
  std::optional<std::string> failure;

  static Verdict skip() { return {}; }
  static Verdict pass() { return {true, std::nullopt}; }
  static Verdict fail(std::string why) { return {true, std::move(why)}; }
};

// Per-worker state; a fresh instance is made for every worker thread.
using ClosureCheck = std::function<Verdict(const Closure&)>;
using CheckFactory = std::function<ClosureCheck()>;

inline SuiteResult run_checks(const std::string& name, const SuiteOptions& opt, const CheckFactory& factory) {
  const auto universe = enumerate_closures(opt.bounds);
  SuiteResult result;
  result.name = name;
  result.closures = universe.size();
  unsigned workers = opt.workers ? opt.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, std::max<std::size_t>(1, universe.size()));
  std::mutex lock;
  auto work = [&](unsigned w) {
    ClosureCheck check = factory();
    std::size_t checked = 0;
    std::vector<std::string> bad;
    for (std::size_t i = w; i < universe.size(); i += workers) {
      const Closure& c = universe[i];
      Verdict v;
      try {
        v = check(c);
      } catch (const BudgetExceeded& e) {
        v = Verdict::fail(e.what());
      } catch (const Divergence& e) {
        v = Verdict::fail(e.what());
      }
      if (!v.applicable) continue;
      ++checked;
      if (v.failure) bad.push_back(print_closure(c) + ": " + *v.failure);
    }
    std::lock_guard<std::mutex> guard(lock);
    result.checked += checked;
    result.counterexamples.insert(result.counterexamples.end(), bad.begin(), bad.end());
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::sort(result.counterexamples.begin(), result.counterexamples.end());
  return result;
}

inline std::string show(const Term& t) { return print_term(t); }

// Terms reachable in exactly one or two cpr steps (including t itself).
inline TermSet two_step_reducts(const Env& env, const Term& t, std::size_t budget) {
  return cprs_within(env, t, 2, budget);
}

// Environments differing from env in exactly one entry, the replacement drawn
// from the atom entries of the universe, plus the lpx reducts of env.
inline std::vector<Env> env_variants(const Params& p, const Env& env, const std::vector<Term>& atoms) {
  std::vector<Env> out;
  const auto entries = env.entries_outermost_first();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    for (BindKind kind : {BindKind::Abbr, BindKind::Abst}) {
      for (const auto& a : atoms) {
        Env e;
        for (std::size_t j = 0; j < entries.size(); ++j) e = e.push(j == k ? Entry{kind, a} : entries[j]);
        out.push_back(e);
      }
    }
  }
  for (const auto& e : lpx_reducts(p, env)) out.push_back(e);
  canonicalize(out);
  return out;
}

}  // namespace detail

// One parallel step from a common source leaves reducts that meet in one more
// step.
inline SuiteResult suite_diamond(const SuiteOptions& opt) {
  const std::size_t budget = opt.params.budget;
  return detail::run_checks("diamond", opt, [budget] {
    return [budget](const Closure& c) {
      const auto rs = cpr_reducts(c.env, c.term, budget);
      std::vector<TermSet> next;
      for (const auto& r : rs) next.push_back(cpr_reducts(c.env, r, budget));
      for (std::size_t i = 0; i < rs.size(); ++i) {
        for (std::size_t j = i + 1; j < rs.size(); ++j) {
          if (!intersects(next[i], next[j])) {
            return detail::Verdict::fail(detail::show(rs[i]) + " and " + detail::show(rs[j]) + " do not meet");
          }
        }
      }
      return detail::Verdict::pass();
    };
  });
}

// Any two computations of at most two steps join within two further steps.
inline SuiteResult suite_church_rosser(const SuiteOptions& opt) {
  const std::size_t budget = opt.params.budget;
  return detail::run_checks("church-rosser", opt, [budget] {
    return [budget](const Closure& c) {
      const auto rs = detail::two_step_reducts(c.env, c.term, budget);
      std::vector<TermSet> next;
      for (const auto& r : rs) next.push_back(cprs_within(c.env, r, 2, budget));
      for (std::size_t i = 0; i < rs.size(); ++i) {
        for (std::size_t j = i + 1; j < rs.size(); ++j) {
          if (!intersects(next[i], next[j])) {
            return detail::Verdict::fail(detail::show(rs[i]) + " and " + detail::show(rs[j]) + " do not join");
          }
        }
      }
      return detail::Verdict::pass();
    };
  });
}

// Extended reduction keeps the atomic arity.
inline SuiteResult suite_arity_preservation(const SuiteOptions& opt) {
  const Params p = opt.params;
  return detail::run_checks("arity-preservation", opt, [p] {
    return [p](const Closure& c) {
      const auto a = aaa(c.env, c.term);
      if (!a) return detail::Verdict::skip();
      for (const auto& t2 : cpx_reducts(p, c.env, c.term)) {
        const auto b = aaa(c.env, t2);
        if (!b || !(*b == *a)) {
          return detail::Verdict::fail("reduct " + detail::show(t2) + " has arity " +
                                       (b ? print_arity(*b) : std::string("none")) + ", expected " +
                                       print_arity(*a));
        }
      }
      return detail::Verdict::pass();
    };
  });
}

// Closures with an arity are strongly normalizing for extended reduction.
inline SuiteResult suite_sn_extended(const SuiteOptions& opt) {
  const Params p = opt.params;
  return detail::run_checks("sn-extended", opt, [p] {
    return [p](const Closure& c) {
      if (!aaa(c.env, c.term)) return detail::Verdict::skip();
      const auto rep = csx_certify(p, c.env, c.term);
      if (rep.ok()) return detail::Verdict::pass();
      return detail::Verdict::fail(std::string("csx ") + to_string(rep.status) + " " + rep.reason);
    };
  });
}

// Closures with an arity are strongly qrst-normalizing.  Each worker keeps one
// certifier, so subgraphs certified for one root are not explored again.
inline SuiteResult suite_very_big_tree(const SuiteOptions& opt) {
  const Params p = opt.params;
  return detail::run_checks("very-big-tree", opt, [p] {
    auto cert = std::make_shared<Certifier<Closure, ClosureHash>>(
        [p](const Closure& c) { return fpb_successors(p, c.env, c.term); }, p.budget);
    return [p, cert](const Closure& c) {
      if (!aaa(c.env, c.term)) return detail::Verdict::skip();
      const auto rep = cert->certify(c);
      if (rep.ok()) return detail::Verdict::pass();
      return detail::Verdict::fail(std::string("fsb ") + to_string(rep.status) + " " + rep.reason);
    };
  });
}

// Valid closures stay valid along one and two cpr steps, and satisfy the four
// preservation properties.
inline SuiteResult suite_subject_reduction(const SuiteOptions& opt) {
  const Params p = opt.params;
  return detail::run_checks("subject-reduction", opt, [p] {
    return [p](const Closure& c) {
      const auto v = snv_check(p, c.env, c.term);
      if (!v.valid) {
        if (v.failure && v.failure->exhausted != Exhaustion::None) return detail::Verdict::fail(v.failure->reason);
        return detail::Verdict::skip();
      }
      for (const auto& t2 : detail::two_step_reducts(c.env, c.term, p.budget)) {
        const auto v2 = snv_check(p, c.env, t2);
        if (!v2.valid) return detail::Verdict::fail("reduct " + detail::show(t2) + " invalid: " + v2.failure->reason);
      }
      const auto rep = preservation_report(p, c.env, c.term);
      if (!rep.pd.holds) return detail::Verdict::fail("PD fails at " + rep.pd.witness);
      if (!rep.pvr.holds) return detail::Verdict::fail("PVR fails at " + rep.pvr.witness);
      if (!rep.pvt.holds) return detail::Verdict::fail("PVT fails at " + rep.pvt.witness);
      if (!rep.pt.holds) return detail::Verdict::fail("PT fails at " + rep.pt.witness);
      return detail::Verdict::pass();
    };
  });
}

// Lazy equivalence: the two definitions agree and are symmetric; extended
// reduction is insensitive to lazily equivalent environments.  Partners are
// single-entry variants and lpx reducts of the closure's environment.
// Pointwise union is checked total against every universe environment of the
// same length.
inline SuiteResult suite_lleq_laws(const SuiteOptions& opt) {
  const Params p = opt.params;
  const auto atoms = enumerate_atoms(opt.bounds.max_sort, opt.bounds.ref_bound());
  auto by_length = std::make_shared<std::vector<std::vector<Env>>>(opt.bounds.max_env_len + 1);
  for (auto& e : enumerate_envs(opt.bounds.max_env_len, enumerate_terms(2, atoms))) {
    (*by_length)[e.length()].push_back(std::move(e));
  }
  return detail::run_checks("lleq-laws", opt, [p, atoms, by_length] {
    return [p, atoms, by_length](const Closure& c) {
      for (const auto& l2 : (*by_length)[c.env.length()]) {
        for (std::size_t l = 0; l <= 2; ++l) {
          const auto u = llor(l, c.term, c.env, l2);
          if (!u || u->length() != c.env.length()) {
            return detail::Verdict::fail("llor undefined at level " + std::to_string(l) + " with " + print_env(l2));
          }
        }
      }
      const auto partners = detail::env_variants(p, c.env, atoms);
      const auto reducts1 = cpx_reducts(p, c.env, c.term);
      for (const auto& l2 : partners) {
        const std::string at = " with " + print_env(l2);
        for (std::size_t l = 0; l <= 2; ++l) {
          const bool alt = lleq_holds(l, c.term, c.env, l2);
          if (alt != lleq_rules_holds(l, c.term, c.env, l2)) {
            return detail::Verdict::fail("definitions disagree at level " + std::to_string(l) + at);
          }
          if (alt != lleq_holds(l, c.term, l2, c.env)) {
            return detail::Verdict::fail("not symmetric at level " + std::to_string(l) + at);
          }
          if (!llor(l, c.term, c.env, l2)) return detail::Verdict::fail("llor undefined" + at);
        }
        if (!lleq_holds(0, c.term, c.env, l2)) continue;
        for (const auto& t2 : cpx_reducts(p, l2, c.term)) {
          if (!contains(reducts1, t2)) return detail::Verdict::fail("cpx reduct " + detail::show(t2) + " not shared" + at);
        }
        for (const auto& t2 : reducts1) {
          if (!lleq_holds(0, t2, c.env, l2)) {
            return detail::Verdict::fail("lleq lost by reduct " + detail::show(t2) + at);
          }
        }
      }
      return detail::Verdict::pass();
    };
  });
}

// Iterated static types never return their input, and a degree d guarantees
// static types up to d with degree d - n.
inline SuiteResult suite_statics_laws(const SuiteOptions& opt) {
  const Params p = opt.params;
  return detail::run_checks("statics-laws", opt, [p] {
    return [p](const Closure& c) {
      const auto d = da(p, c.env, c.term);
      const bool has_type = lstas(p, c.env, c.term, 0).has_value();
      if (has_type != d.has_value()) return detail::Verdict::fail("degree and static type disagree on definedness");
      if (!d) return detail::Verdict::skip();
      for (std::size_t n = 0; n <= 3; ++n) {
        const auto u = lstas(p, c.env, c.term, n + 1);
        if (u && *u == c.term) return detail::Verdict::fail("lstas at " + std::to_string(n + 1) + " is reflexive");
      }
      for (std::size_t n = 0; n <= *d; ++n) {
        const auto u = lstas(p, c.env, c.term, n);
        if (!u) return detail::Verdict::fail("lstas undefined at n=" + std::to_string(n));
        const auto du = da(p, c.env, *u);
        if (!du || *du != *d - n) {
          return detail::Verdict::fail("degree of lstas at n=" + std::to_string(n) + " is " +
                                       (du ? std::to_string(*du) : std::string("none")));
        }
      }
      return detail::Verdict::pass();
    };
  });
}

// The algorithmic validity checker agrees with the bounded relational oracle.
inline SuiteResult suite_oracle_agreement(const SuiteOptions& opt) {
  const Params p = opt.params;
  const std::size_t steps = opt.oracle_steps;
  return detail::run_checks("oracle-agreement", opt, [p, steps] {
    return [p, steps](const Closure& c) {
      const auto v = snv_check(p, c.env, c.term);
      if (v.failure && v.failure->exhausted != Exhaustion::None) return detail::Verdict::fail(v.failure->reason);
      const bool o = snv_oracle(p, c.env, c.term, steps);
      if (v.valid != o) {
        return detail::Verdict::fail(std::string("checker says ") + (v.valid ? "valid" : "invalid") +
                                     ", oracle says " + (o ? "valid" : "invalid"));
      }
      return detail::Verdict::pass();
    };
  });
}

inline const std::map<std::string, std::function<SuiteResult(const SuiteOptions&)>>& suite_table() {
  static const std::map<std::string, std::function<SuiteResult(const SuiteOptions&)>> table{
      {"diamond", suite_diamond},
      {"church-rosser", suite_church_rosser},
      {"arity-preservation", suite_arity_preservation},
      {"sn-extended", suite_sn_extended},
      {"very-big-tree", suite_very_big_tree},
      {"subject-reduction", suite_subject_reduction},
      {"lleq-laws", suite_lleq_laws},
      {"statics-laws", suite_statics_laws},
      {"oracle-agreement", suite_oracle_agreement},
  };
  return table;
}

}  // namespace lambdadelta
