#pragma once

// Relocation of references (lift), its partial inverse, and the matching
// operations on environments (drop, ranged equivalence).

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lambdadelta/partial.hpp"
#include "lambdadelta/term.hpp"

namespace lambdadelta {

struct RelocPair {
  std::size_t level = 0;
  std::size_t height = 0;
};

// References at depth >= l are shifted up by m; binders raise the level.
inline Term lift(std::size_t l, std::size_t m, const Term& t) {
  if (m == 0 || t.open_bound() <= l) return t;
  switch (t.tag()) {
    case Tag::Sort: return t;
    case Tag::LRef: return Term::lref(t.index() + m);
    case Tag::Abbr:
    case Tag::Abst: return Term::bind(t.bind_kind(), lift(l, m, t.left()), lift(l + 1, m, t.right()));
    case Tag::Appl:
    case Tag::Cast: return Term::flat(t.flat_kind(), lift(l, m, t.left()), lift(l, m, t.right()));
  }
  return t;
}

// The unique T' with lift(l, m, T') == t, if no free reference of t lies in
// the band [l, l + m).
inline std::optional<Term> delift(std::size_t l, std::size_t m, const Term& t) {
  if (m == 0 || t.open_bound() <= l) return t;
  switch (t.tag()) {
    case Tag::Sort: return t;
    case Tag::LRef:
      if (t.index() < l + m) return std::nullopt;
      return Term::lref(t.index() - m);
    case Tag::Abbr:
    case Tag::Abst: {
      auto w = delift(l, m, t.left());
      if (!w) return std::nullopt;
      auto b = delift(l + 1, m, t.right());
      if (!b) return std::nullopt;
      return Term::bind(t.bind_kind(), std::move(*w), std::move(*b));
    }
    case Tag::Appl:
    case Tag::Cast: {
      auto v = delift(l, m, t.left());
      if (!v) return std::nullopt;
      auto b = delift(l, m, t.right());
      if (!b) return std::nullopt;
      return Term::flat(t.flat_kind(), std::move(*v), std::move(*b));
    }
  }
  return std::nullopt;
}

// True iff the variable at depth i occurs free in t, i.e. delift(i, 1, t) fails.
inline bool occurs_free(std::size_t i, const Term& t) {
  if (t.open_bound() <= i) return false;
  switch (t.tag()) {
    case Tag::Sort: return false;
    case Tag::LRef: return t.index() == i;
    case Tag::Abbr:
    case Tag::Abst: return occurs_free(i, t.left()) || occurs_free(i + 1, t.right());
    case Tag::Appl:
    case Tag::Cast: return occurs_free(i, t.left()) || occurs_free(i, t.right());
  }
  return false;
}

inline std::vector<Term> liftv(std::size_t l, std::size_t m, std::span<const Term> ts) {
  std::vector<Term> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(lift(l, m, t));
  return out;
}

// Applies the pairs left to right.
inline Term lifts(std::span<const RelocPair> cs, const Term& t) {
  Term out = t;
  for (const auto& c : cs) out = lift(c.level, c.height, out);
  return out;
}

// Removes the entries at depths [l, l + m) and delifts the entries below l.
// Undefined when an entry below l refers into the band, or when fewer than
// l + m entries exist (with m > 0).
inline Partial<Env> drop(std::size_t l, std::size_t m, const Env& env) {
  if (m == 0) return env;
  if (env.empty()) {
    return Undefined{"drop of " + std::to_string(m) + " entries beyond the environment", std::nullopt, {}};
  }
  if (l == 0) {
    auto rest = env.suffix(m);
    if (!rest) return Undefined{"drop of " + std::to_string(m) + " entries beyond the environment", std::nullopt, {}};
    return *rest;
  }
  // skip rule: the head stays and is delifted one level down
  auto kept = drop(l - 1, m, env.tail());
  if (!kept) {
    Undefined why = kept.error();
    if (why.depth) why.depth = *why.depth + 1;
    return why;
  }
  auto head = delift(l - 1, m, env.head().term);
  if (!head) {
    return Undefined{"entry 0 refers into the dropped band", std::size_t{0}, {}};
  }
  return kept->push(env.head().kind, std::move(*head));
}

inline Partial<Env> drops(std::span<const RelocPair> cs, const Env& env) {
  Env cur = env;
  for (const auto& c : cs) {
    auto next = drop(c.level, c.height, cur);
    if (!next) return next;
    cur = *next;
  }
  return cur;
}

// Same length, and identical entries at depths [l, l + m).
inline bool lreq(std::size_t l, std::size_t m, const Env& a, const Env& b) {
  if (a.length() != b.length()) return false;
  const Env* x = &a;
  const Env* y = &b;
  for (std::size_t i = 0; !x->empty(); ++i) {
    if (i >= l && i - l < m && !(x->head() == y->head())) return false;
    x = &x->tail();
    y = &y->tail();
  }
  return true;
}

}  // namespace lambdadelta
