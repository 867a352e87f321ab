#pragma once

// Iterated static type assignment, degree assignment and the refinement for
// preservation of degree.

#include <string>

#include "lambdadelta/partial.hpp"
#include "lambdadelta/relocation.hpp"
#include "lambdadelta/term.hpp"

namespace lambdadelta {

using Degree = std::size_t;

namespace detail {

// Re-anchors a failure reported inside the environment `shift` entries outside
// the caller's.  Failures at depth d inside a binder body are at depth d - 1
// outside it; callers pass the adjustment explicitly.
template <class T>
Partial<T> reanchor_out(Undefined why, std::size_t shift) {
  if (why.depth) why.depth = *why.depth + shift;
  return why;
}

inline Undefined missing_entry(std::size_t i) {
  return Undefined{"no entry at depth " + std::to_string(i), i, {}};
}

}  // namespace detail

// The n-iterated static type of t.  Undefined when the head reference is not
// hereditarily closed; the failing depth is relative to `env`.
inline Partial<Term> lstas(const Params& p, const Env& env, const Term& t, std::size_t n) {
  switch (t.tag()) {
    case Tag::Sort: return Term::sort(p.next_iter(t.index(), n));
    case Tag::LRef: {
      const std::size_t i = t.index();
      const auto found = env.lookup(i);
      if (!found) return detail::missing_entry(i);
      const auto& [entry, outer] = *found;
      if (entry.kind == BindKind::Abbr) {
        auto v = lstas(p, outer, entry.term, n);
        if (!v) return detail::reanchor_out<Term>(v.error(), i + 1);
        return lift(0, i + 1, *v);
      }
      if (n == 0) {
        auto w = lstas(p, outer, entry.term, 0);
        if (!w) return detail::reanchor_out<Term>(w.error(), i + 1);
        return t;
      }
      auto w = lstas(p, outer, entry.term, n - 1);
      if (!w) return detail::reanchor_out<Term>(w.error(), i + 1);
      return lift(0, i + 1, *w);
    }
    case Tag::Abbr:
    case Tag::Abst: {
      auto b = lstas(p, env.push(t.bind_kind(), t.left()), t.right(), n);
      if (!b) {
        Undefined why = b.error();
        if (why.depth) why.depth = *why.depth - 1;
        return why;
      }
      return Term::bind(t.bind_kind(), t.left(), *b);
    }
    case Tag::Appl: {
      auto b = lstas(p, env, t.right(), n);
      if (!b) return b;
      return Term::appl(t.left(), *b);
    }
    case Tag::Cast: return lstas(p, env, t.right(), n);
  }
  return Undefined{"unreachable", std::nullopt, {}};
}

// The degree of t; sorts take deg(k), definitions inherit, declarations add one.
inline Partial<Degree> da(const Params& p, const Env& env, const Term& t) {
  switch (t.tag()) {
    case Tag::Sort: return p.deg(t.index());
    case Tag::LRef: {
      const std::size_t i = t.index();
      const auto found = env.lookup(i);
      if (!found) return detail::missing_entry(i);
      const auto& [entry, outer] = *found;
      auto d = da(p, outer, entry.term);
      if (!d) return detail::reanchor_out<Degree>(d.error(), i + 1);
      return entry.kind == BindKind::Abbr ? *d : *d + 1;
    }
    case Tag::Abbr:
    case Tag::Abst: {
      auto d = da(p, env.push(t.bind_kind(), t.left()), t.right());
      if (!d) {
        Undefined why = d.error();
        if (why.depth) why.depth = *why.depth - 1;
        return why;
      }
      return d;
    }
    case Tag::Appl:
    case Tag::Cast: return da(p, env, t.right());
  }
  return Undefined{"unreachable", std::nullopt, {}};
}

// l1 refines l2 for preservation of degree.  Unlike lsubr, the atom rule needs
// both environments empty.
inline bool lsubd_holds(const Params& p, const Env& l1, const Env& l2) {
  if (l1.empty() || l2.empty()) return l1.empty() && l2.empty();
  if (!lsubd_holds(p, l1.tail(), l2.tail())) return false;
  const Entry& a = l1.head();
  const Entry& b = l2.head();
  if (a == b) return true;
  if (a.kind != BindKind::Abbr || b.kind != BindKind::Abst || !a.term.is_cast()) return false;
  if (!(a.term.left() == b.term)) return false;
  const auto dw = da(p, l2.tail(), b.term);
  const auto dv = da(p, l1.tail(), a.term.right());
  return dw && dv && *dv == *dw + 1;
}

}  // namespace lambdadelta
