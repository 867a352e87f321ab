#pragma once

// Structural operations, the concrete text syntax and bounded enumeration.
//
// Text grammar (whitespace-insensitive, decimal naturals):
//   term  := '*' nat | '#' nat | '(' op term term ')'     op in abbr abst appl cast
//   env   := '[' (entry (';' entry)*)? ']'                 outermost entry first
//   entry := 'def' term | 'dec' term
// '#0' refers to the rightmost entry of a printed environment.

#include <cctype>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lambdadelta/partial.hpp"
#include "lambdadelta/term.hpp"

namespace lambdadelta {

inline std::size_t length(const Env& env) { return env.length(); }

// Entries of `inner` become the innermost entries of the result.
inline Env append(const Env& outer, const Env& inner) {
  Env out = outer;
  for (auto& e : inner.entries_outermost_first()) out = out.push(std::move(e));
  return out;
}

// applv([V1; ...; Vn], T) = (appl V1 (... (appl Vn T)))
inline Term applv(std::span<const Term> args, const Term& t) {
  Term out = t;
  for (auto it = args.rbegin(); it != args.rend(); ++it) out = Term::appl(*it, out);
  return out;
}

// Neutral terms: anything but a binder.
inline bool simple(const Term& t) { return !t.is_bind(); }

// Same top structure: the same atom, or the same constructor kind.
inline bool tsts(const Term& a, const Term& b) {
  if (a.is_atom() || b.is_atom()) return a == b;
  return a.tag() == b.tag();
}

// ---------------------------------------------------------------------------
// Printing

inline void print_term_to(std::string& out, const Term& t) {
  switch (t.tag()) {
    case Tag::Sort:
      out += '*';
      out += std::to_string(t.index());
      return;
    case Tag::LRef:
      out += '#';
      out += std::to_string(t.index());
      return;
    case Tag::Abbr: out += "(abbr "; break;
    case Tag::Abst: out += "(abst "; break;
    case Tag::Appl: out += "(appl "; break;
    case Tag::Cast: out += "(cast "; break;
  }
  print_term_to(out, t.left());
  out += ' ';
  print_term_to(out, t.right());
  out += ')';
}

inline std::string print_term(const Term& t) {
  std::string out;
  print_term_to(out, t);
  return out;
}

inline std::string print_env(const Env& env) {
  std::string out = "[";
  bool first = true;
  for (const auto& e : env.entries_outermost_first()) {
    if (!first) out += "; ";
    first = false;
    out += e.kind == BindKind::Abbr ? "def " : "dec ";
    print_term_to(out, e.term);
  }
  out += ']';
  return out;
}

inline std::string print_closure(const Closure& c) { return print_env(c.env) + " " + print_term(c.term); }

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::size_t nat() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t digit = static_cast<std::size_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint32_t>::max() - digit) / 10) fail("natural number too large");
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail("expected a natural number");
    return value;
  }

  std::string_view word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Term term() {
    const char c = peek();
    if (c == '*') {
      ++pos_;
      return Term::sort(nat());
    }
    if (c == '#') {
      ++pos_;
      return Term::lref(nat());
    }
    if (c != '(') fail("expected a term");
    ++pos_;
    const std::size_t op_pos = (skip_ws(), pos_);
    const std::string_view op = word();
    Tag tag;
    if (op == "abbr") {
      tag = Tag::Abbr;
    } else if (op == "abst") {
      tag = Tag::Abst;
    } else if (op == "appl") {
      tag = Tag::Appl;
    } else if (op == "cast") {
      tag = Tag::Cast;
    } else {
      pos_ = op_pos;
      fail("unknown constructor");
    }
    Term left = term();
    Term right = term();
    expect(')');
    switch (tag) {
      case Tag::Abbr: return Term::abbr(std::move(left), std::move(right));
      case Tag::Abst: return Term::abst(std::move(left), std::move(right));
      case Tag::Appl: return Term::appl(std::move(left), std::move(right));
      default: return Term::cast(std::move(left), std::move(right));
    }
  }

  Env env() {
    expect('[');
    Env out;
    if (peek() == ']') {
      ++pos_;
      return out;
    }
    while (true) {
      const std::size_t kw_pos = (skip_ws(), pos_);
      const std::string_view kw = word();
      BindKind kind;
      if (kw == "def") {
        kind = BindKind::Abbr;
      } else if (kw == "dec") {
        kind = BindKind::Abst;
      } else {
        pos_ = kw_pos;
        fail("expected 'def' or 'dec'");
      }
      out = out.push(kind, term());
      if (peek() == ';') {
        ++pos_;
        continue;
      }
      expect(']');
      return out;
    }
  }

  void finish() {
    if (!at_end()) fail("trailing input");
  }

  [[noreturn]] void fail(const std::string& what) { throw SyntaxError(what, pos_); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Throws SyntaxError carrying the byte offset of the problem.
inline Term parse_term(std::string_view text) {
  detail::Reader r(text);
  Term t = r.term();
  r.finish();
  return t;
}

inline Env parse_env(std::string_view text) {
  detail::Reader r(text);
  Env e = r.env();
  r.finish();
  return e;
}

// ---------------------------------------------------------------------------
// Bounded enumeration

struct UniverseBounds {
  std::size_t max_term_size = 0;
  std::size_t max_env_len = 0;
  std::size_t max_sort = 0;

  // References range over depths below this bound.
  std::size_t ref_bound() const { return max_env_len + max_term_size; }
};

inline std::vector<Term> enumerate_atoms(std::size_t max_sort, std::size_t ref_bound) {
  std::vector<Term> out;
  for (std::size_t k = 0; k <= max_sort; ++k) out.push_back(Term::sort(k));
  for (std::size_t i = 0; i < ref_bound; ++i) out.push_back(Term::lref(i));
  return out;
}

// All terms with at most `max_size` constructors over the given atoms, sorted.
inline std::vector<Term> enumerate_terms(std::size_t max_size, const std::vector<Term>& atoms) {
  // by_size[s] holds the terms of exactly s constructors
  std::vector<std::vector<Term>> by_size(max_size + 1);
  if (max_size >= 1) by_size[1] = atoms;
  for (std::size_t s = 3; s <= max_size; ++s) {
    for (std::size_t ls = 1; ls + 1 < s; ++ls) {
      const std::size_t rs = s - 1 - ls;
      for (const auto& l : by_size[ls]) {
        for (const auto& r : by_size[rs]) {
          by_size[s].push_back(Term::abbr(l, r));
          by_size[s].push_back(Term::abst(l, r));
          by_size[s].push_back(Term::appl(l, r));
          by_size[s].push_back(Term::cast(l, r));
        }
      }
    }
  }
  std::vector<Term> out;
  for (auto& group : by_size) out.insert(out.end(), group.begin(), group.end());
  canonicalize(out);
  return out;
}

// Environments of at most `max_len` entries whose terms come from `entry_terms`.
inline std::vector<Env> enumerate_envs(std::size_t max_len, const std::vector<Term>& entry_terms) {
  std::vector<Env> out{Env{}};
  std::vector<Env> frontier{Env{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Env> next;
    for (const auto& base : frontier) {
      for (BindKind kind : {BindKind::Abbr, BindKind::Abst}) {
        for (const auto& t : entry_terms) next.push_back(base.push(kind, t));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  canonicalize(out);
  return out;
}

// Every closure whose term has at most `max_term_size` constructors and whose
// environment has at most `max_env_len` entries of size at most 2.  Sort
// indices are bounded by `max_sort`, reference depths by ref_bound().
// The result is strictly increasing in the closure order.
inline std::vector<Closure> enumerate_closures(const UniverseBounds& b) {
  const auto atoms = enumerate_atoms(b.max_sort, b.ref_bound());
  const auto terms = enumerate_terms(b.max_term_size, atoms);
  if (terms.empty()) return {};
  const auto envs = enumerate_envs(b.max_env_len, enumerate_terms(2, atoms));
  std::vector<Closure> out;
  out.reserve(terms.size() * envs.size());
  for (const auto& env : envs) {
    for (const auto& t : terms) out.push_back(Closure{env, t});
  }
  return out;
}

inline std::vector<Closure> enumerate_closures(std::size_t max_term_size, std::size_t max_env_len,
                                               std::size_t max_sort) {
  return enumerate_closures(UniverseBounds{max_term_size, max_env_len, max_sort});
}

}  // namespace lambdadelta
