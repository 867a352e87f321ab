#pragma once

// Parallel reduction: exact reduct enumeration (ordinary and extended rule
// sets share one engine), environment reduction, complete development,
// normalization, computation search and the refinement for reduction.

#include <algorithm>
#include <deque>
#include <iterator>
#include <string>
#include <unordered_set>

#include "lambdadelta/memo.hpp"
#include "lambdadelta/partial.hpp"
#include "lambdadelta/relocation.hpp"
#include "lambdadelta/syntax.hpp"
#include "lambdadelta/term.hpp"

namespace lambdadelta {

namespace detail {

// Which rule set to enumerate.  The extended set adds the sort step (s), the
// annotation step (e), and lets delta fire on declarations.
struct RuleSet {
  bool extended = false;
  std::size_t c = 1;
  std::size_t D = 2;

  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

struct ReductKey {
  Env env;
  Term term;
  RuleSet rules;

  friend bool operator==(const ReductKey&, const ReductKey&) = default;
};

struct ReductKeyHash {
  std::size_t operator()(const ReductKey& k) const {
    std::size_t h = hash_mix(k.env.hash(), k.term.hash());
    h = hash_mix(h, k.rules.extended ? 1 : 2);
    h = hash_mix(h, k.rules.c);
    return hash_mix(h, k.rules.D);
  }
};

inline MemoTable<ReductKey, TermSet, ReductKeyHash>& reduct_memo() {
  thread_local MemoTable<ReductKey, TermSet, ReductKeyHash> table(1 << 16);
  return table;
}

inline void check_budget(std::size_t count, std::size_t budget, const char* what) {
  if (count > budget) throw BudgetExceeded(std::string(what) + " (" + std::to_string(count) + " elements)");
}

inline std::shared_ptr<const TermSet> reducts(const Env& env, const Term& t, const RuleSet& rules,
                                              std::size_t budget);

inline TermSet compute_reducts(const Env& env, const Term& t, const RuleSet& rules, std::size_t budget) {
  TermSet out;
  switch (t.tag()) {
    case Tag::Sort: {
      out.push_back(t);
      if (rules.extended) {
        const Params p{rules.c, rules.D};
        if (p.deg(t.index()) >= 1) out.push_back(Term::sort(p.next(t.index())));
      }
      break;
    }
    case Tag::LRef: {
      out.push_back(t);
      const auto found = env.lookup(t.index());
      if (found && (rules.extended || found->first.kind == BindKind::Abbr)) {
        const auto rs = reducts(found->second, found->first.term, rules, budget);
        for (const auto& v : *rs) out.push_back(lift(0, t.index() + 1, v));
      }
      break;
    }
    case Tag::Abbr:
    case Tag::Abst: {
      const auto rw = reducts(env, t.left(), rules, budget);
      const auto rt = reducts(env.push(t.bind_kind(), t.left()), t.right(), rules, budget);
      check_budget(rw->size() * rt->size(), budget, "bind reducts");
      for (const auto& w : *rw) {
        for (const auto& b : *rt) out.push_back(Term::bind(t.bind_kind(), w, b));
      }
      if (t.is_abbr()) {
        // zeta: the body does not refer to the abbreviation
        for (const auto& b : *rt) {
          if (auto d = delift(0, 1, b)) out.push_back(std::move(*d));
        }
      }
      break;
    }
    case Tag::Appl: {
      const auto rv = reducts(env, t.left(), rules, budget);
      const auto rf = reducts(env, t.right(), rules, budget);
      check_budget(rv->size() * rf->size(), budget, "application reducts");
      for (const auto& v : *rv) {
        for (const auto& f : *rf) out.push_back(Term::appl(v, f));
      }
      const Term& fn = t.right();
      if (fn.is_abst()) {
        // beta
        const auto rw = reducts(env, fn.left(), rules, budget);
        const auto rb = reducts(env.push(BindKind::Abst, fn.left()), fn.right(), rules, budget);
        check_budget(rv->size() * rw->size() * rb->size(), budget, "beta reducts");
        for (const auto& v : *rv) {
          for (const auto& w : *rw) {
            const Term annotated = Term::cast(w, v);
            for (const auto& b : *rb) out.push_back(Term::abbr(annotated, b));
          }
        }
      } else if (fn.is_abbr()) {
        // theta
        const auto ru = reducts(env, fn.left(), rules, budget);
        const auto rb = reducts(env.push(BindKind::Abbr, fn.left()), fn.right(), rules, budget);
        check_budget(rv->size() * ru->size() * rb->size(), budget, "theta reducts");
        for (const auto& v : *rv) {
          const Term lifted = lift(0, 1, v);
          for (const auto& u : *ru) {
            for (const auto& b : *rb) out.push_back(Term::abbr(u, Term::appl(lifted, b)));
          }
        }
      }
      break;
    }
    case Tag::Cast: {
      const auto ru = reducts(env, t.left(), rules, budget);
      const auto rt = reducts(env, t.right(), rules, budget);
      check_budget(ru->size() * rt->size(), budget, "cast reducts");
      for (const auto& u : *ru) {
        for (const auto& b : *rt) out.push_back(Term::cast(u, b));
      }
      // epsilon
      out.insert(out.end(), rt->begin(), rt->end());
      // e: the annotation itself
      if (rules.extended) out.insert(out.end(), ru->begin(), ru->end());
      break;
    }
  }
  canonicalize(out);
  check_budget(out.size(), budget, "reduct set");
  return out;
}

inline std::shared_ptr<const TermSet> reducts(const Env& env, const Term& t, const RuleSet& rules,
                                              std::size_t budget) {
  ReductKey key{env, t, rules};
  auto& memo = reduct_memo();
  if (auto hit = memo.find(key)) return hit;
  return memo.insert(key, compute_reducts(env, t, rules, budget));
}

inline EnvSet env_reducts(const Env& env, const RuleSet& rules, std::size_t budget) {
  if (env.empty()) return {env};
  const Env& outer = env.tail();
  const EnvSet tails = env_reducts(outer, rules, budget);
  const auto heads = reducts(outer, env.head().term, rules, budget);
  check_budget(tails.size() * heads->size(), budget, "environment reducts");
  EnvSet out;
  out.reserve(tails.size() * heads->size());
  for (const auto& l : tails) {
    for (const auto& w : *heads) out.push_back(l.push(env.head().kind, w));
  }
  canonicalize(out);
  return out;
}

}  // namespace detail

// { T2 | cpr(L, T1, T2) }, computed exactly.  Throws BudgetExceeded.
inline TermSet cpr_reducts(const Env& env, const Term& t, std::size_t budget = Params{}.budget) {
  return *detail::reducts(env, t, detail::RuleSet{}, budget);
}

inline bool cpr_holds(const Env& env, const Term& t1, const Term& t2, std::size_t budget = Params{}.budget) {
  return contains(*detail::reducts(env, t1, detail::RuleSet{}, budget), t2);
}

// Entry i is rewritten in the environment strictly outside it; kinds are kept.
inline EnvSet lpr_reducts(const Env& env, std::size_t budget = Params{}.budget) {
  return detail::env_reducts(env, detail::RuleSet{}, budget);
}

inline bool lpr_holds(const Env& l1, const Env& l2, std::size_t budget = Params{}.budget) {
  if (l1.length() != l2.length()) return false;
  return contains(lpr_reducts(l1, budget), l2);
}

// Complete development: every subterm is developed, then the top redex is
// contracted with priority zeta > beta > theta > epsilon > delta.  The result
// is always a member of cpr_reducts(env, t).
inline Term cpr_full(const Env& env, const Term& t) {
  switch (t.tag()) {
    case Tag::Sort: return t;
    case Tag::LRef: {
      const auto found = env.lookup(t.index());
      if (found && found->first.kind == BindKind::Abbr) {
        return lift(0, t.index() + 1, cpr_full(found->second, found->first.term));
      }
      return t;
    }
    case Tag::Abbr: {
      Term body = cpr_full(env.push(BindKind::Abbr, t.left()), t.right());
      if (auto d = delift(0, 1, body)) return std::move(*d);
      return Term::abbr(cpr_full(env, t.left()), std::move(body));
    }
    case Tag::Abst:
      return Term::abst(cpr_full(env, t.left()), cpr_full(env.push(BindKind::Abst, t.left()), t.right()));
    case Tag::Appl: {
      const Term& fn = t.right();
      Term arg = cpr_full(env, t.left());
      if (fn.is_abst()) {
        return Term::abbr(Term::cast(cpr_full(env, fn.left()), std::move(arg)),
                          cpr_full(env.push(BindKind::Abst, fn.left()), fn.right()));
      }
      if (fn.is_abbr()) {
        Term body = cpr_full(env.push(BindKind::Abbr, fn.left()), fn.right());
        if (auto d = delift(0, 1, body)) return Term::appl(std::move(arg), std::move(*d));
        return Term::abbr(cpr_full(env, fn.left()), Term::appl(lift(0, 1, arg), std::move(body)));
      }
      return Term::appl(std::move(arg), cpr_full(env, fn));
    }
    case Tag::Cast: return cpr_full(env, t.right());
  }
  return t;
}

// Iterates cpr_full to a fixpoint.  Throws Divergence when fuel runs out.
inline Term normalize(const Env& env, const Term& t, std::size_t fuel = Params{}.fuel) {
  Term cur = t;
  for (std::size_t i = 0; i < fuel; ++i) {
    Term next = cpr_full(env, cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw Divergence("no normal form for " + print_term(t) + " within " + std::to_string(fuel) + " steps");
}

// Breadth-first search for t2 among the computations from t1.  Visiting more
// than `budget` distinct terms throws BudgetExceeded.
inline bool cprs_holds(const Env& env, const Term& t1, const Term& t2, std::size_t budget = Params{}.budget) {
  if (t1 == t2) return true;
  std::unordered_set<Term, TermHash> seen{t1};
  std::deque<Term> queue{t1};
  while (!queue.empty()) {
    const Term cur = queue.front();
    queue.pop_front();
    for (const auto& next : *detail::reducts(env, cur, detail::RuleSet{}, budget)) {
      if (next == t2) return true;
      if (seen.insert(next).second) {
        detail::check_budget(seen.size(), budget, "computation search");
        queue.push_back(next);
      }
    }
  }
  return false;
}

// Terms reachable from t by at most `steps` cpr steps.
inline TermSet cprs_within(const Env& env, const Term& t, std::size_t steps,
                            std::size_t budget = Params{}.budget) {
  TermSet all{t};
  TermSet frontier{t};
  for (std::size_t s = 0; s < steps && !frontier.empty(); ++s) {
    TermSet next;
    for (const auto& u : frontier) {
      for (const auto& r : *detail::reducts(env, u, detail::RuleSet{}, budget)) {
        if (!contains(all, r)) next.push_back(r);
      }
    }
    canonicalize(next);
    TermSet merged;
    std::set_union(all.begin(), all.end(), next.begin(), next.end(), std::back_inserter(merged));
    all = std::move(merged);
    detail::check_budget(all.size(), budget, "bounded computation");
    frontier = std::move(next);
  }
  return all;
}

// Conversion by comparison of normal forms; Divergence propagates.
inline bool conv(const Env& env, const Term& t1, const Term& t2, std::size_t fuel = Params{}.fuel) {
  if (t1 == t2) return true;
  return normalize(env, t1, fuel) == normalize(env, t2, fuel);
}

// l1 refines l2 for preservation of reduction.
inline bool lsubr_holds(const Env& l1, const Env& l2) {
  if (l2.empty()) return true;
  if (l1.empty()) return false;
  const Entry& a = l1.head();
  const Entry& b = l2.head();
  const bool pair = a == b;
  const bool beta = a.kind == BindKind::Abbr && b.kind == BindKind::Abst && a.term.is_cast() &&
                    a.term.left() == b.term;
  if (!pair && !beta) return false;
  return lsubr_holds(l1.tail(), l2.tail());
}

}  // namespace lambdadelta
