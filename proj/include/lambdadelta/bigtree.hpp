#pragma once

// Subclosures, proper rst-steps on closures, and certification that the
// "very big tree" rooted at a closure is finite.

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>
#include <vector>

#include "lambdadelta/extended.hpp"
#include "lambdadelta/relocation.hpp"
#include "lambdadelta/syntax.hpp"
#include "lambdadelta/term.hpp"
#include "lambdadelta/traversal.hpp"

namespace lambdadelta {

// Sum of the sizes of the term and of every entry term.  Every direct
// subclosure has a strictly smaller weight.
inline std::size_t closure_weight(const Closure& c) {
  std::size_t w = c.term.size();
  for (const Env* e = &c.env; !e->empty(); e = &e->tail()) w += e->head().term.size();
  return w;
}

// Direct subclosures: components of items, the entry behind #0, and every
// closure obtained by dropping the innermost m + 1 entries when t does not
// refer to them.
inline ClosureSet fqu_children(const Env& env, const Term& t) {
  ClosureSet out;
  if (t.is_bind() || t.is_flat()) out.push_back(Closure{env, t.left()});
  if (t.is_flat()) out.push_back(Closure{env, t.right()});
  if (t.is_bind()) out.push_back(Closure{env.push(t.bind_kind(), t.left()), t.right()});
  if (t.is_lref() && t.index() == 0 && !env.empty()) out.push_back(Closure{env.tail(), env.head().term});
  const Env* k = &env;
  for (std::size_t m = 0; m < env.length(); ++m) {
    k = &k->tail();
    if (auto u = delift(0, m + 1, t)) out.push_back(Closure{*k, std::move(*u)});
  }
  canonicalize(out);
  return out;
}

// Reflexive and transitive closure of the direct-subclosure relation.
inline bool fqus_holds(const Closure& c1, const Closure& c2, std::size_t budget = Params{}.budget) {
  if (c1 == c2) return true;
  if (closure_weight(c2) >= closure_weight(c1)) return false;
  std::unordered_set<Closure, ClosureHash> seen{c1};
  std::deque<Closure> queue{c1};
  while (!queue.empty()) {
    const Closure cur = queue.front();
    queue.pop_front();
    for (auto& next : fqu_children(cur.env, cur.term)) {
      if (next == c2) return true;
      if (closure_weight(next) <= closure_weight(c2)) continue;
      if (seen.insert(next).second) {
        if (seen.size() > budget) throw BudgetExceeded("subclosure search");
        queue.push_back(std::move(next));
      }
    }
  }
  return false;
}

// One proper rst-step: a direct subclosure, a proper cpx step on the term, or
// an lpx step on the environment that t can observe.
//
// The order only steers traversals: direct subclosures first, then the
// complete development of t, then the other term steps, then environment
// steps, each group smallest first.
inline std::vector<Closure> fpb_successors(const Params& p, const Env& env, const Term& t) {
  auto by_weight = [](std::vector<Closure>& xs) {
    canonicalize(xs);
    std::stable_sort(xs.begin(), xs.end(),
                     [](const Closure& a, const Closure& b) { return closure_weight(a) < closure_weight(b); });
  };
  // a subclosure may coincide with a term step, e.g. ([], *0) under (cast *1 *0)
  auto fresh = [](const std::vector<Closure>& xs, const Closure& c) {
    return std::find(xs.begin(), xs.end(), c) == xs.end();
  };
  std::vector<Closure> out = fqu_children(env, t);
  by_weight(out);
  const Term developed = cpr_full(env, t);
  if (!(developed == t) && fresh(out, Closure{env, developed})) out.push_back(Closure{env, developed});
  std::vector<Closure> steps;
  for (const auto& u : cpx_proper_successors(p, env, t)) {
    if (!(u == developed) && fresh(out, Closure{env, u})) steps.push_back(Closure{env, u});
  }
  by_weight(steps);
  out.insert(out.end(), steps.begin(), steps.end());
  steps.clear();
  for (const auto& e : lpx_reducts(p, env)) {
    if (!lleq_holds(0, t, env, e)) steps.push_back(Closure{e, t});
  }
  by_weight(steps);
  out.insert(out.end(), steps.begin(), steps.end());
  return out;
}

// One qrst-step, decided rather than enumerated (the lazy-equivalence step has
// infinitely many partners).
inline bool fpbq_holds(const Params& p, const Closure& c1, const Closure& c2) {
  if (c1 == c2) return true;
  if (c1.term == c2.term) {
    if (lleq_holds(0, c1.term, c1.env, c2.env)) return true;
    if (lpx_holds(p, c1.env, c2.env)) return true;
  }
  if (c1.env == c2.env && cpx_holds(p, c1.env, c1.term, c2.term)) return true;
  return contains(fqu_children(c1.env, c1.term), c2);
}

using BigTreeReport = Certificate<Closure>;
using ClosureEdgeSink = std::function<void(const Closure&, const Closure&)>;

// The steps to direct subclosures and to the complete development: a
// sub-relation of the proper rst-steps with small branching, so that a cycle
// found in it is a cycle of the full relation.
inline std::vector<Closure> fpb_probe_successors(const Env& env, const Term& t) {
  std::vector<Closure> out = fqu_children(env, t);
  std::stable_sort(out.begin(), out.end(),
                   [](const Closure& a, const Closure& b) { return closure_weight(a) < closure_weight(b); });
  const Term developed = cpr_full(env, t);
  if (!(developed == t) && std::find(out.begin(), out.end(), Closure{env, developed}) == out.end()) {
    out.push_back(Closure{env, developed});
  }
  return out;
}

// Strong qrst-normalization, certified over proper rst-steps.  A cycle is
// first searched for among the probe steps, where it costs little to find;
// the full traversal runs only when the probe finds none.
inline BigTreeReport fsb_certify(const Params& p, const Env& env, const Term& t,
                                 const ClosureEdgeSink& on_edge = {}) {
  const Closure root{env, t};
  auto probe = certify_acyclic<Closure, ClosureHash>(
      root, [](const Closure& c) { return fpb_probe_successors(c.env, c.term); }, p.budget);
  if (probe.status == CertStatus::Cycle) {
    if (on_edge) {
      for (std::size_t i = 0; i + 1 < probe.cycle.size(); ++i) on_edge(probe.cycle[i], probe.cycle[i + 1]);
    }
    return probe;
  }
  return certify_acyclic<Closure, ClosureHash>(
      root, [&](const Closure& c) { return fpb_successors(p, c.env, c.term); }, p.budget, on_edge);
}

// "ENV TERM -> ENV TERM", the line format of exported graphs.
inline std::string edge_line(const Closure& src, const Closure& dst) {
  return print_closure(src) + " -> " + print_closure(dst);
}

}  // namespace lambdadelta
