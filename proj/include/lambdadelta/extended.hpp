#pragma once

// Extended (rt-) reduction, normal terms, certified strong normalization,
// hereditarily free variables, lazy equivalence, pointwise union and the
// environment-level normalization predicates.

#include <algorithm>
#include <string>
#include <vector>

#include "lambdadelta/partial.hpp"
#include "lambdadelta/reduction.hpp"
#include "lambdadelta/relocation.hpp"
#include "lambdadelta/term.hpp"
#include "lambdadelta/traversal.hpp"

namespace lambdadelta {

namespace detail {

inline RuleSet extended_rules(const Params& p) { return RuleSet{true, p.c, p.D}; }

}  // namespace detail

// { T2 | cpx(L, T1, T2) }: cpr plus the sort step, the annotation step, and
// delta on declarations (a declared variable steps to its expected type).
inline TermSet cpx_reducts(const Params& p, const Env& env, const Term& t) {
  return *detail::reducts(env, t, detail::extended_rules(p), p.budget);
}

inline bool cpx_holds(const Params& p, const Env& env, const Term& t1, const Term& t2) {
  return contains(*detail::reducts(env, t1, detail::extended_rules(p), p.budget), t2);
}

inline EnvSet lpx_reducts(const Params& p, const Env& env) {
  return detail::env_reducts(env, detail::extended_rules(p), p.budget);
}

inline bool lpx_holds(const Params& p, const Env& l1, const Env& l2) {
  if (l1.length() != l2.length()) return false;
  return contains(lpx_reducts(p, l1), l2);
}

// t is normal for extended reduction: its only reduct is itself.
inline bool cnx_holds(const Params& p, const Env& env, const Term& t) {
  const auto rs = detail::reducts(env, t, detail::extended_rules(p), p.budget);
  return rs->size() == 1;
}

using SnReport = Certificate<Term>;

// Proper cpx successors (the reflexive reduct removed), smallest first.
inline std::vector<Term> cpx_proper_successors(const Params& p, const Env& env, const Term& t) {
  std::vector<Term> out;
  for (const auto& u : *detail::reducts(env, t, detail::extended_rules(p), p.budget)) {
    if (!(u == t)) out.push_back(u);
  }
  return out;
}

// Strong normalization of t in env for extended reduction, decided as
// finiteness and acyclicity of the proper-step graph.  The chain of complete
// developments is searched for a cycle first; it is a chain of proper steps,
// so a cycle there refutes normalization without enumerating every reduct.
inline SnReport csx_certify(const Params& p, const Env& env, const Term& t) {
  auto probe = certify_acyclic<Term, TermHash>(
      t,
      [&](const Term& u) {
        Term v = cpr_full(env, u);
        return v == u ? std::vector<Term>{} : std::vector<Term>{std::move(v)};
      },
      p.budget);
  if (probe.status == CertStatus::Cycle) return probe;
  return certify_acyclic<Term, TermHash>(
      t, [&](const Term& u) { return cpx_proper_successors(p, env, u); }, p.budget);
}

// ---------------------------------------------------------------------------
// Hereditarily free variables

// Free references of t, sorted and distinct.
inline std::vector<std::size_t> free_refs(const Term& t) {
  std::vector<std::size_t> out;
  auto walk = [&](auto&& self, const Term& u, std::size_t depth) -> void {
    if (u.open_bound() <= depth) return;
    switch (u.tag()) {
      case Tag::Sort: return;
      case Tag::LRef: out.push_back(u.index() - depth); return;
      case Tag::Abbr:
      case Tag::Abst:
        self(self, u.left(), depth);
        self(self, u.right(), depth + 1);
        return;
      case Tag::Appl:
      case Tag::Cast:
        self(self, u.left(), depth);
        self(self, u.right(), depth);
        return;
    }
  };
  walk(walk, t, 0);
  canonicalize(out);
  return out;
}

namespace detail {

// Marks every i < env.length() that is hereditarily free at level l.
inline void mark_frees(std::size_t l, const Env& env, const Term& t, std::size_t offset, std::vector<bool>& mask) {
  for (std::size_t j : free_refs(t)) {
    if (j + offset >= mask.size()) break;
    mask[j + offset] = true;
    if (j < l) continue;
    if (auto found = env.lookup(j)) mark_frees(0, found->second, found->first.term, offset + j + 1, mask);
  }
}

}  // namespace detail

// The variable at depth i is hereditarily free at level l in (env, t): it is
// free in t, or free in an entry j >= l that t refers to, hereditarily.
inline bool frees_holds(std::size_t i, std::size_t l, const Env& env, const Term& t) {
  if (occurs_free(i, t)) return true;
  for (std::size_t j : free_refs(t)) {
    if (j >= i) break;
    if (j < l) continue;
    const auto found = env.lookup(j);
    if (found && frees_holds(i - j - 1, 0, found->second, found->first.term)) return true;
  }
  return false;
}

// The hereditarily free depths of (env, t) at level l, restricted to depths
// below env.length(); these are the only ones lazy equivalence can observe.
inline std::vector<bool> frees_mask(std::size_t l, const Env& env, const Term& t) {
  std::vector<bool> mask(env.length(), false);
  detail::mark_frees(l, env, t, 0, mask);
  return mask;
}

// Lazy equivalence: equal lengths, and identical entries at every depth i >= l
// that is hereditarily free at level l in (l1, t).
inline bool lleq_holds(std::size_t l, const Term& t, const Env& l1, const Env& l2) {
  if (l1.length() != l2.length()) return false;
  const auto mask = frees_mask(l, l1, t);
  const Env* x = &l1;
  const Env* y = &l2;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (i >= l && mask[i] && !(x->head() == y->head())) return false;
    x = &x->tail();
    y = &y->tail();
  }
  return true;
}

// Lazy equivalence by its structural rules, following the term and every
// referred entry.  Agrees with lleq_holds; kept as an independent definition.
inline bool lleq_rules_holds(std::size_t l, const Term& t, const Env& l1, const Env& l2) {
  if (l1.length() != l2.length()) return false;
  switch (t.tag()) {
    case Tag::Sort: return true;
    case Tag::LRef: {
      const std::size_t i = t.index();
      if (i < l || l1.length() <= i) return true;
      const auto e1 = l1.lookup(i);
      const auto e2 = l2.lookup(i);
      return e1->first == e2->first && lleq_rules_holds(0, e1->first.term, e1->second, e2->second);
    }
    case Tag::Abbr:
    case Tag::Abst:
      return lleq_rules_holds(l, t.left(), l1, l2) &&
             lleq_rules_holds(l + 1, t.right(), l1.push(t.bind_kind(), t.left()), l2.push(t.bind_kind(), t.left()));
    case Tag::Appl:
    case Tag::Cast: return lleq_rules_holds(l, t.left(), l1, l2) && lleq_rules_holds(l, t.right(), l1, l2);
  }
  return false;
}

// Pointwise union: entry i comes from l2 when l <= i and i is hereditarily
// free at level l in (l1, t), and from l1 otherwise.
inline Partial<Env> llor(std::size_t l, const Term& t, const Env& l1, const Env& l2) {
  if (l1.length() != l2.length()) {
    return Undefined{"environments of lengths " + std::to_string(l1.length()) + " and " +
                         std::to_string(l2.length()),
                     std::nullopt, {}};
  }
  const auto mask = frees_mask(l, l1, t);
  std::vector<Entry> picked;
  const Env* x = &l1;
  const Env* y = &l2;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    picked.push_back(i >= l && mask[i] ? y->head() : x->head());
    x = &x->tail();
    y = &y->tail();
  }
  Env out;
  for (auto it = picked.rbegin(); it != picked.rend(); ++it) out = out.push(*it);
  return out;
}

// ---------------------------------------------------------------------------
// Environment normalization

using EnvSnReport = Certificate<Env>;

inline std::vector<Env> lsx_successors(const Params& p, std::size_t l, const Term& t, const Env& env) {
  std::vector<Env> out;
  for (const auto& e : lpx_reducts(p, env)) {
    if (!lleq_holds(l, t, env, e)) out.push_back(e);
  }
  return out;
}

// No infinite chain of lpx steps from env changes the entries t observes at
// level l.
inline EnvSnReport lsx_certify(const Params& p, std::size_t l, const Term& t, const Env& env) {
  return certify_acyclic<Env, EnvHash>(
      env, [&](const Env& e) { return lsx_successors(p, l, t, e); }, p.budget);
}

struct LcosxResult {
  CertStatus status = CertStatus::Ok;
  bool holds = true;
  std::string reason;
};

// Every entry below level l is normalizing, in the sense of lsx, at the level
// of its own position.  Holds trivially at level 0 and on the empty environment.
inline LcosxResult lcosx_certify(const Params& p, std::size_t l, const Env& env) {
  const Env* cur = &env;
  while (l > 0 && !cur->empty()) {
    --l;
    const Entry& e = cur->head();
    const auto rep = lsx_certify(p, l, e.term, cur->tail());
    if (rep.status == CertStatus::Budget) return {CertStatus::Budget, false, rep.reason};
    if (rep.status == CertStatus::Cycle) return {CertStatus::Cycle, false, "entry at level " + std::to_string(l)};
    cur = &cur->tail();
  }
  return {};
}

}  // namespace lambdadelta
