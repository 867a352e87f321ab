#pragma once

// Stratified validity: the degree-guarded static-type/computation relation,
// an algorithmic validity checker, a bounded relational oracle, higher
// validity, the refinement for preservation of validity, and a report of the
// four preservation properties used by the subject-reduction argument.

#include <algorithm>
#include <iterator>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "lambdadelta/arity.hpp"
#include "lambdadelta/partial.hpp"
#include "lambdadelta/reduction.hpp"
#include "lambdadelta/statics.hpp"
#include "lambdadelta/syntax.hpp"
#include "lambdadelta/term.hpp"

namespace lambdadelta {

// Why a term is not valid.  `exhausted` is set when the verdict is "invalid"
// only because fuel or budget ran out.
enum class Exhaustion { None, Fuel, Budget };

struct ValidityFailure {
  std::string position;
  std::string rule;
  std::string reason;
  Exhaustion exhausted = Exhaustion::None;
};

struct ValidityReport {
  bool valid = true;
  std::optional<ValidityFailure> failure;
};

// lstas(t, n) after checking the degree guard n <= da(t).
inline std::optional<Term> guarded_lstas(const Params& p, const Env& env, const Term& t, std::size_t n) {
  const auto d = da(p, env, t);
  if (!d || n > *d) return std::nullopt;
  return lstas(p, env, t, n).to_optional();
}

// t1 reaches t2 by its n-th static type followed by a computation.  The
// computation is searched exhaustively (breadth first, within p.budget terms).
inline bool scpds_check(const Params& p, const Env& env, const Term& t1, const Term& t2, std::size_t n) {
  const auto x = guarded_lstas(p, env, t1, n);
  return x && cprs_holds(env, *x, t2, p.budget);
}

// The guarded static types of t1 at n1 and of t2 at n2 have a common reduct,
// decided by comparing normal forms.  Throws Divergence.
inline bool scpes_check(const Params& p, const Env& env, const Term& t1, std::size_t n1, const Term& t2,
                        std::size_t n2) {
  const auto x1 = guarded_lstas(p, env, t1, n1);
  if (!x1) return false;
  const auto x2 = guarded_lstas(p, env, t2, n2);
  if (!x2) return false;
  return normalize(env, *x1, p.fuel) == normalize(env, *x2, p.fuel);
}

namespace detail {

class SnvChecker {
 public:
  explicit SnvChecker(const Params& p) : p_(p) {}

  ValidityReport check(const Env& env, const Term& t) {
    // Valid terms have an arity, and terms with an arity normalize; failing
    // here keeps every later normalization call terminating.
    const auto a = aaa(env, t);
    if (!a) return invalid(a.error().position, "arity", a.error().reason);
    try {
      return walk(env, t, "root");
    } catch (const Divergence& e) {
      return invalid("root", "fuel", e.what(), Exhaustion::Fuel);
    } catch (const BudgetExceeded& e) {
      return invalid("root", "budget", e.what(), Exhaustion::Budget);
    }
  }

 private:
  static ValidityReport invalid(std::string pos, std::string rule, std::string reason,
                                Exhaustion ex = Exhaustion::None) {
    return ValidityReport{false, ValidityFailure{std::move(pos), std::move(rule), std::move(reason), ex}};
  }

  Term nf(const Env& env, const Term& t) { return normalize(env, t, p_.fuel); }

  ValidityReport walk(const Env& env, const Term& t, const std::string& pos) {
    switch (t.tag()) {
      case Tag::Sort: return {};
      case Tag::LRef: {
        const auto found = env.lookup(t.index());
        if (!found) return invalid(pos, "lref", "no entry at depth " + std::to_string(t.index()));
        return walk(found->second, found->first.term, pos + ".entry");
      }
      case Tag::Abbr:
      case Tag::Abst: {
        auto w = walk(env, t.left(), pos + ".1");
        if (!w.valid) return w;
        return walk(env.push(t.bind_kind(), t.left()), t.right(), pos + ".2");
      }
      case Tag::Cast: {
        const Term& u = t.left();
        const Term& b = t.right();
        auto ru = walk(env, u, pos + ".1");
        if (!ru.valid) return ru;
        auto rb = walk(env, b, pos + ".2");
        if (!rb.valid) return rb;
        const auto u0 = guarded_lstas(p_, env, u, 0);
        if (!u0) return invalid(pos, "cast", "annotation has no degree");
        const auto b1 = guarded_lstas(p_, env, b, 1);
        if (!b1) return invalid(pos, "cast", "annotated term has degree 0 or none");
        if (!(nf(env, *u0) == nf(env, *b1))) {
          return invalid(pos, "cast", "annotation " + print_term(*u0) + " is not convertible with the type " +
                                          print_term(*b1));
        }
        return {};
      }
      case Tag::Appl: {
        const Term& v = t.left();
        const Term& f = t.right();
        auto rv = walk(env, v, pos + ".1");
        if (!rv.valid) return rv;
        auto rf = walk(env, f, pos + ".2");
        if (!rf.valid) return rf;
        const auto v1 = guarded_lstas(p_, env, v, 1);
        if (!v1) return invalid(pos, "appl", "argument has degree 0 or none");
        const Term w0 = nf(env, *v1);
        const auto df = da(p_, env, f);
        if (!df) return invalid(pos, "appl", "applied term has no degree");
        for (std::size_t n = 0; n <= *df; ++n) {
          const auto x = lstas(p_, env, f, n);
          if (!x) break;
          const Term y = nf(env, *x);
          if (y.is_abst() && y.left() == w0) return {};
        }
        return invalid(pos, "appl", "no iterated type of the applied term is an abstraction over " +
                                        print_term(w0));
      }
    }
    return invalid(pos, "?", "unreachable");
  }

  Params p_;
};

}  // namespace detail

inline ValidityReport snv_check(const Params& p, const Env& env, const Term& t) {
  return detail::SnvChecker(p).check(env, t);
}

inline bool snv_valid(const Params& p, const Env& env, const Term& t) { return snv_check(p, env, t).valid; }

// ---------------------------------------------------------------------------
// Relational oracle

namespace detail {

// Targets T2 of scpds(t, T2, n) whose computation has at most `steps` steps.
inline TermSet scpds_targets(const Params& p, const Env& env, const Term& t, std::size_t n, std::size_t steps) {
  const auto x = guarded_lstas(p, env, t, n);
  if (!x) return {};
  return cprs_within(env, *x, steps, p.budget);
}

inline bool snv_oracle_rec(const Params& p, const Env& env, const Term& t, std::size_t steps) {
  switch (t.tag()) {
    case Tag::Sort: return true;
    case Tag::LRef: {
      const auto found = env.lookup(t.index());
      return found && snv_oracle_rec(p, found->second, found->first.term, steps);
    }
    case Tag::Abbr:
    case Tag::Abst:
      return snv_oracle_rec(p, env, t.left(), steps) &&
             snv_oracle_rec(p, env.push(t.bind_kind(), t.left()), t.right(), steps);
    case Tag::Cast: {
      if (!snv_oracle_rec(p, env, t.left(), steps) || !snv_oracle_rec(p, env, t.right(), steps)) return false;
      // some U0 with scpds(U, U0, 0) and scpds(T, U0, 1)
      return intersects(scpds_targets(p, env, t.left(), 0, steps), scpds_targets(p, env, t.right(), 1, steps));
    }
    case Tag::Appl: {
      if (!snv_oracle_rec(p, env, t.left(), steps) || !snv_oracle_rec(p, env, t.right(), steps)) return false;
      // some W0 with scpds(V, W0, 1) and scpds(T, (abst W0 U0), n)
      const TermSet domains = scpds_targets(p, env, t.left(), 1, steps);
      if (domains.empty()) return false;
      const auto df = da(p, env, t.right());
      if (!df) return false;
      for (std::size_t n = 0; n <= *df; ++n) {
        for (const auto& x : scpds_targets(p, env, t.right(), n, steps)) {
          if (x.is_abst() && contains(domains, x.left())) return true;
        }
      }
      return false;
    }
  }
  return false;
}

}  // namespace detail

// Validity by search over derivations of the relational rules, every
// computation limited to `steps` parallel steps.  No arity gate and no
// normalization.  Throws BudgetExceeded when a reachable set exceeds p.budget.
inline bool snv_oracle(const Params& p, const Env& env, const Term& t, std::size_t steps) {
  return detail::snv_oracle_rec(p, env, t, steps);
}

// ---------------------------------------------------------------------------
// Higher validity and refinement

// u and t are valid, and u at n matches t at n + 1 for every n <= d.
inline bool shnv_check(const Params& p, const Env& env, const Term& u, const Term& t, std::size_t d) {
  if (!snv_valid(p, env, u) || !snv_valid(p, env, t)) return false;
  for (std::size_t n = 0; n <= d; ++n) {
    if (!scpes_check(p, env, u, n, t, n + 1)) return false;
  }
  return true;
}

inline bool lsubsv_holds(const Params& p, const Env& l1, const Env& l2) {
  if (l1.empty() || l2.empty()) return l1.empty() && l2.empty();
  if (!lsubsv_holds(p, l1.tail(), l2.tail())) return false;
  const Entry& a = l1.head();
  const Entry& b = l2.head();
  if (a == b) return true;
  if (a.kind != BindKind::Abbr || b.kind != BindKind::Abst || !a.term.is_cast()) return false;
  const Term& w = b.term;
  const Term& v = a.term.right();
  if (!(a.term.left() == w)) return false;
  const Env& k1 = l1.tail();
  const Env& k2 = l2.tail();
  const auto dw = da(p, k2, w);
  const auto dv = da(p, k1, v);
  if (!dw || !dv || *dv != *dw + 1) return false;
  return shnv_check(p, k1, w, v, *dw) && snv_valid(p, k2, w);
}

// ---------------------------------------------------------------------------
// Preservation properties

struct PreservationCheck {
  bool holds = true;
  std::size_t instances = 0;
  std::string witness;  // first failing instance
};

struct PreservationReport {
  PreservationCheck pd;   // degree preserved by reduction
  PreservationCheck pvr;  // validity preserved by reduction
  PreservationCheck pvt;  // validity preserved by static type
  PreservationCheck pt;   // static type preserved by reduction, up to conversion

  bool all_hold() const { return pd.holds && pvr.holds && pvt.holds && pt.holds; }
};

namespace detail {

inline void record(PreservationCheck& c, bool ok, const std::string& witness) {
  ++c.instances;
  if (!ok && c.holds) {
    c.holds = false;
    c.witness = witness;
  }
}

}  // namespace detail

// Checks the four properties at (env, t) over every T2 in cpr_reducts(env, t)
// and every L2 in lpr_reducts(env).  Expects (env, t) to be valid.  Throws
// Divergence or BudgetExceeded.
inline PreservationReport preservation_report(const Params& p, const Env& env, const Term& t) {
  PreservationReport r;
  const auto d = da(p, env, t);
  if (!d) {
    detail::record(r.pd, false, "no degree for " + print_closure({env, t}));
    return r;
  }
  std::vector<Term> types;
  for (std::size_t n = 0; n <= *d; ++n) {
    const auto u = lstas(p, env, t, n);
    detail::record(r.pvt, u && snv_valid(p, env, *u), "n=" + std::to_string(n));
    types.push_back(u ? *u : t);
  }
  const auto targets = cpr_reducts(env, t, p.budget);
  const auto envs = lpr_reducts(env, p.budget);
  for (const auto& l2 : envs) {
    for (const auto& t2 : targets) {
      const std::string at = print_closure({l2, t2});
      const auto d2 = da(p, l2, t2);
      detail::record(r.pd, d2 && *d2 == *d, at);
      detail::record(r.pvr, snv_valid(p, l2, t2), at);
      for (std::size_t n = 0; n <= *d; ++n) {
        const auto u2 = lstas(p, l2, t2, n);
        detail::record(r.pt, u2 && conv(l2, types[n], *u2, p.fuel), at + " n=" + std::to_string(n));
      }
    }
  }
  return r;
}

}  // namespace lambdadelta
