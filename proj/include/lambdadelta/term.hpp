#pragma once

// Core data model: terms, environments, closures and the sort parameters.
//
// Terms and environments are immutable and structurally shared.  Every node
// caches its size, hash and "open bound" (one past the largest free
// reference), so equality, hashing and relocation short-cuts are cheap.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace lambdadelta {

using SortIndex = std::size_t;
using VarDepth = std::size_t;

enum class BindKind : std::uint8_t { Abbr, Abst };
enum class FlatKind : std::uint8_t { Appl, Cast };

// Tag order fixes the canonical term order used by enumerations.
enum class Tag : std::uint8_t { Sort, LRef, Abbr, Abst, Appl, Cast };

namespace detail {

inline std::size_t hash_mix(std::size_t seed, std::size_t value) {
  // boost::hash_combine with a 64-bit constant
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

struct TermNode;
struct EnvNode;

}  // namespace detail

class Term {
 public:
  static Term sort(SortIndex k);
  static Term lref(VarDepth i);
  static Term bind(BindKind kind, Term w, Term t);
  static Term flat(FlatKind kind, Term v, Term t);

  static Term abbr(Term v, Term t) { return bind(BindKind::Abbr, std::move(v), std::move(t)); }
  static Term abst(Term w, Term t) { return bind(BindKind::Abst, std::move(w), std::move(t)); }
  static Term appl(Term v, Term t) { return flat(FlatKind::Appl, std::move(v), std::move(t)); }
  static Term cast(Term w, Term t) { return flat(FlatKind::Cast, std::move(w), std::move(t)); }

  Tag tag() const;
  bool is_sort() const { return tag() == Tag::Sort; }
  bool is_lref() const { return tag() == Tag::LRef; }
  bool is_atom() const { return tag() == Tag::Sort || tag() == Tag::LRef; }
  bool is_bind() const { return tag() == Tag::Abbr || tag() == Tag::Abst; }
  bool is_flat() const { return tag() == Tag::Appl || tag() == Tag::Cast; }
  bool is_abbr() const { return tag() == Tag::Abbr; }
  bool is_abst() const { return tag() == Tag::Abst; }
  bool is_appl() const { return tag() == Tag::Appl; }
  bool is_cast() const { return tag() == Tag::Cast; }

  BindKind bind_kind() const { return tag() == Tag::Abbr ? BindKind::Abbr : BindKind::Abst; }
  FlatKind flat_kind() const { return tag() == Tag::Appl ? FlatKind::Appl : FlatKind::Cast; }

  // Sort index or reference depth; only meaningful on atoms.
  std::size_t index() const;
  // First component of a binder or flat item: the annotation, definiens or argument.
  const Term& left() const;
  // Second component: the body, function or annotated term.
  const Term& right() const;

  std::size_t size() const;
  std::size_t hash() const;
  // Smallest n such that every free reference is below n.
  std::size_t open_bound() const;

  bool same_node(const Term& other) const { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const detail::TermNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::TermNode> node_;
};

namespace detail {

struct TermNode {
  Tag tag;
  std::size_t index = 0;
  std::optional<Term> left;
  std::optional<Term> right;
  std::size_t size = 1;
  std::size_t hash = 0;
  std::size_t open = 0;
};

}  // namespace detail

inline Term Term::sort(SortIndex k) {
  auto node = std::make_shared<detail::TermNode>();
  node->tag = Tag::Sort;
  node->index = k;
  node->hash = detail::hash_mix(0x51, k);
  return Term(std::move(node));
}

inline Term Term::lref(VarDepth i) {
  auto node = std::make_shared<detail::TermNode>();
  node->tag = Tag::LRef;
  node->index = i;
  node->hash = detail::hash_mix(0x7e, i);
  node->open = i + 1;
  return Term(std::move(node));
}

inline Term Term::bind(BindKind kind, Term w, Term t) {
  auto node = std::make_shared<detail::TermNode>();
  node->tag = kind == BindKind::Abbr ? Tag::Abbr : Tag::Abst;
  node->size = 1 + w.size() + t.size();
  node->hash = detail::hash_mix(detail::hash_mix(static_cast<std::size_t>(node->tag) * 0x1f3, w.hash()), t.hash());
  const std::size_t body_open = t.open_bound() == 0 ? 0 : t.open_bound() - 1;
  node->open = std::max(w.open_bound(), body_open);
  node->left = std::move(w);
  node->right = std::move(t);
  return Term(std::move(node));
}

inline Term Term::flat(FlatKind kind, Term v, Term t) {
  auto node = std::make_shared<detail::TermNode>();
  node->tag = kind == FlatKind::Appl ? Tag::Appl : Tag::Cast;
  node->size = 1 + v.size() + t.size();
  node->hash = detail::hash_mix(detail::hash_mix(static_cast<std::size_t>(node->tag) * 0x1f3, v.hash()), t.hash());
  node->open = std::max(v.open_bound(), t.open_bound());
  node->left = std::move(v);
  node->right = std::move(t);
  return Term(std::move(node));
}

inline Tag Term::tag() const { return node_->tag; }
inline std::size_t Term::index() const { return node_->index; }
inline const Term& Term::left() const { return *node_->left; }
inline const Term& Term::right() const { return *node_->right; }
inline std::size_t Term::size() const { return node_->size; }
inline std::size_t Term::hash() const { return node_->hash; }
inline std::size_t Term::open_bound() const { return node_->open; }

inline bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.hash != y.hash || x.tag != y.tag || x.size != y.size) return false;
  if (x.tag == Tag::Sort || x.tag == Tag::LRef) return x.index == y.index;
  return *x.left == *y.left && *x.right == *y.right;
}

// Canonical order: size, then constructor, then index, then components.
inline std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (auto c = x.size <=> y.size; c != 0) return c;
  if (auto c = x.tag <=> y.tag; c != 0) return c;
  if (x.tag == Tag::Sort || x.tag == Tag::LRef) return x.index <=> y.index;
  if (auto c = *x.left <=> *y.left; c != 0) return c;
  return *x.right <=> *y.right;
}

struct Entry {
  BindKind kind;
  Term term;

  friend bool operator==(const Entry&, const Entry&) = default;
  friend std::strong_ordering operator<=>(const Entry& a, const Entry& b) {
    if (auto c = a.kind <=> b.kind; c != 0) return c;
    return a.term <=> b.term;
  }
};

// Persistent list of entries; the head is the innermost entry (depth 0).
class Env {
 public:
  Env() = default;

  std::size_t length() const;
  bool empty() const { return node_ == nullptr; }
  std::size_t hash() const;

  const Entry& head() const;
  const Env& tail() const;

  // Extends with a new innermost entry.
  Env push(BindKind kind, Term term) const;
  Env push(Entry entry) const { return push(entry.kind, std::move(entry.term)); }

  // Entry at depth i together with the environment strictly outside it.
  std::optional<std::pair<Entry, Env>> lookup(std::size_t i) const;
  // The environment without its i innermost entries, if it has that many.
  std::optional<Env> suffix(std::size_t i) const;

  // Entries outermost first (reading order).
  std::vector<Entry> entries_outermost_first() const;

  friend bool operator==(const Env& a, const Env& b);
  friend std::strong_ordering operator<=>(const Env& a, const Env& b);

 private:
  explicit Env(std::shared_ptr<const detail::EnvNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const detail::EnvNode> node_;
};

namespace detail {

struct EnvNode {
  Entry head;
  Env tail;
  std::size_t length = 1;
  std::size_t hash = 0;
};

inline std::size_t entry_hash(const Entry& e) {
  return hash_mix(e.kind == BindKind::Abbr ? 0xab : 0xcd, e.term.hash());
}

}  // namespace detail

inline std::size_t Env::length() const { return node_ ? node_->length : 0; }
inline std::size_t Env::hash() const { return node_ ? node_->hash : 0x3c; }
inline const Entry& Env::head() const { return node_->head; }
inline const Env& Env::tail() const { return node_->tail; }

inline Env Env::push(BindKind kind, Term term) const {
  Entry e{kind, std::move(term)};
  const std::size_t h = detail::hash_mix(hash(), detail::entry_hash(e));
  return Env(std::make_shared<const detail::EnvNode>(detail::EnvNode{std::move(e), *this, length() + 1, h}));
}

inline std::optional<Env> Env::suffix(std::size_t i) const {
  const Env* cur = this;
  for (; i > 0; --i) {
    if (cur->empty()) return std::nullopt;
    cur = &cur->node_->tail;
  }
  return *cur;
}

inline std::optional<std::pair<Entry, Env>> Env::lookup(std::size_t i) const {
  const Env* cur = this;
  for (; i > 0; --i) {
    if (cur->empty()) return std::nullopt;
    cur = &cur->node_->tail;
  }
  if (cur->empty()) return std::nullopt;
  return std::make_pair(cur->node_->head, cur->node_->tail);
}

inline std::vector<Entry> Env::entries_outermost_first() const {
  std::vector<Entry> out;
  out.reserve(length());
  for (const Env* cur = this; !cur->empty(); cur = &cur->node_->tail) out.push_back(cur->node_->head);
  std::reverse(out.begin(), out.end());
  return out;
}

inline bool operator==(const Env& a, const Env& b) {
  const Env* x = &a;
  const Env* y = &b;
  while (true) {
    if (x->node_ == y->node_) return true;
    if (x->empty() || y->empty()) return false;
    if (x->node_->hash != y->node_->hash || x->node_->length != y->node_->length) return false;
    if (!(x->node_->head == y->node_->head)) return false;
    x = &x->node_->tail;
    y = &y->node_->tail;
  }
}

// Length first, then entries innermost first.
inline std::strong_ordering operator<=>(const Env& a, const Env& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  const Env* x = &a;
  const Env* y = &b;
  while (!x->empty() && x->node_ != y->node_) {
    if (auto c = x->node_->head <=> y->node_->head; c != 0) return c;
    x = &x->node_->tail;
    y = &y->node_->tail;
  }
  return std::strong_ordering::equal;
}

struct Closure {
  Env env;
  Term term;

  friend bool operator==(const Closure&, const Closure&) = default;
  friend std::strong_ordering operator<=>(const Closure& a, const Closure& b) {
    if (auto c = a.env <=> b.env; c != 0) return c;
    return a.term <=> b.term;
  }
};

// Sort hierarchy and sort degree, plus the resource limits of the deciders.
// next(k) = k + c and deg(k) = D - floor(k / c), truncated at zero.
struct Params {
  std::size_t c = 1;
  std::size_t D = 2;
  std::size_t fuel = 1000;
  std::size_t budget = 100000;

  SortIndex next(SortIndex k) const { return k + c; }
  SortIndex next_iter(SortIndex k, std::size_t n) const { return k + n * c; }
  std::size_t deg(SortIndex k) const {
    const std::size_t q = k / c;
    return q >= D ? 0 : D - q;
  }
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};
struct EnvHash {
  std::size_t operator()(const Env& e) const { return e.hash(); }
};
struct ClosureHash {
  std::size_t operator()(const Closure& c) const { return detail::hash_mix(c.env.hash(), c.term.hash()); }
};

// Sorted, duplicate-free vectors serve as finite sets throughout.
using TermSet = std::vector<Term>;
using EnvSet = std::vector<Env>;
using ClosureSet = std::vector<Closure>;

template <class T>
void canonicalize(std::vector<T>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

template <class T>
bool contains(const std::vector<T>& sorted, const T& x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

template <class T>
bool intersects(const std::vector<T>& a, const std::vector<T>& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

}  // namespace lambdadelta
