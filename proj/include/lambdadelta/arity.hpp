#pragma once

// Atomic arities (simple types over one base type), their syntax-directed
// assignment, and the refinement for preservation of arity.

#include <memory>
#include <string>

#include "lambdadelta/partial.hpp"
#include "lambdadelta/term.hpp"

namespace lambdadelta {

class Arity {
 public:
  static Arity base() { return Arity(); }
  static Arity arrow(Arity b, Arity a) {
    Arity out;
    out.node_ = make_node(std::move(b), std::move(a));
    return out;
  }

  bool is_base() const { return node_ == nullptr; }
  bool is_arrow() const { return node_ != nullptr; }
  // For Arrow(B, A): the argument arity B and the result arity A.
  const Arity& domain() const;
  const Arity& codomain() const;

  friend bool operator==(const Arity& x, const Arity& y) {
    if (x.node_ == y.node_) return true;
    if (!x.node_ || !y.node_) return false;
    return x.domain() == y.domain() && x.codomain() == y.codomain();
  }

 private:
  struct Node;
  static std::shared_ptr<const Node> make_node(Arity b, Arity a);
  std::shared_ptr<const Node> node_;
};

struct Arity::Node {
  Arity domain;
  Arity codomain;
};

inline std::shared_ptr<const Arity::Node> Arity::make_node(Arity b, Arity a) {
  return std::make_shared<const Node>(Node{std::move(b), std::move(a)});
}

inline const Arity& Arity::domain() const { return node_->domain; }
inline const Arity& Arity::codomain() const { return node_->codomain; }

// "o" for the base arity, "(B -> A)" for arrows.
inline std::string print_arity(const Arity& a) {
  if (a.is_base()) return "o";
  return "(" + print_arity(a.domain()) + " -> " + print_arity(a.codomain()) + ")";
}

namespace detail {

inline Partial<Arity> aaa_at(const Env& env, const Term& t, const std::string& pos) {
  auto fail = [&](std::string why) -> Partial<Arity> { return Undefined{std::move(why), std::nullopt, pos}; };
  switch (t.tag()) {
    case Tag::Sort: return Arity::base();
    case Tag::LRef: {
      const auto found = env.lookup(t.index());
      if (!found) {
        Undefined why{"no entry at depth " + std::to_string(t.index()), t.index(), pos};
        return why;
      }
      auto b = aaa_at(found->second, found->first.term, pos + ".entry");
      if (!b) return b;
      return *b;
    }
    case Tag::Abbr: {
      auto b = aaa_at(env, t.left(), pos + ".1");
      if (!b) return b;
      return aaa_at(env.push(BindKind::Abbr, t.left()), t.right(), pos + ".2");
    }
    case Tag::Abst: {
      auto b = aaa_at(env, t.left(), pos + ".1");
      if (!b) return b;
      auto a = aaa_at(env.push(BindKind::Abst, t.left()), t.right(), pos + ".2");
      if (!a) return a;
      return Arity::arrow(*b, *a);
    }
    case Tag::Appl: {
      auto b = aaa_at(env, t.left(), pos + ".1");
      if (!b) return b;
      auto f = aaa_at(env, t.right(), pos + ".2");
      if (!f) return f;
      if (!f->is_arrow()) return fail("applied term has arity " + print_arity(*f));
      if (!(f->domain() == *b)) {
        return fail("argument arity " + print_arity(*b) + " does not match " + print_arity(f->domain()));
      }
      return f->codomain();
    }
    case Tag::Cast: {
      auto u = aaa_at(env, t.left(), pos + ".1");
      if (!u) return u;
      auto a = aaa_at(env, t.right(), pos + ".2");
      if (!a) return a;
      if (!(*u == *a)) return fail("annotation arity " + print_arity(*u) + " differs from " + print_arity(*a));
      return a;
    }
  }
  return fail("unreachable");
}

}  // namespace detail

// The unique arity of t in env, or the position of the first failing subterm.
// Positions are "root" followed by ".1"/".2" per component and ".entry" when
// the path enters an environment entry.
inline Partial<Arity> aaa(const Env& env, const Term& t) { return detail::aaa_at(env, t, "root"); }

inline bool lsuba_holds(const Env& l1, const Env& l2) {
  if (l1.empty() || l2.empty()) return l1.empty() && l2.empty();
  if (!lsuba_holds(l1.tail(), l2.tail())) return false;
  const Entry& a = l1.head();
  const Entry& b = l2.head();
  if (a == b) return true;
  if (a.kind != BindKind::Abbr || b.kind != BindKind::Abst || !a.term.is_cast()) return false;
  if (!(a.term.left() == b.term)) return false;
  const auto x = aaa(l1.tail(), a.term);
  const auto y = aaa(l2.tail(), b.term);
  return x && y && *x == *y;
}

}  // namespace lambdadelta
