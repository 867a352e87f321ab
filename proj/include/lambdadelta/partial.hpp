#pragma once

// Result types for partial judgments and the resource-limit exceptions.

#include <cassert>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace lambdadelta {

// Why a partial function has no value.  `depth` names the offending de Bruijn
// reference (relative to the caller's environment) when there is one.
struct Undefined {
  std::string reason;
  std::optional<std::size_t> depth;
  std::string position;
};

template <class T>
class Partial {
 public:
  Partial(T value) : state_(std::move(value)) {}                // NOLINT(google-explicit-constructor)
  Partial(Undefined why) : state_(std::move(why)) {}            // NOLINT(google-explicit-constructor)

  bool has_value() const { return std::holds_alternative<T>(state_); }
  explicit operator bool() const { return has_value(); }

  const T& value() const {
    if (!has_value()) throw std::logic_error("Partial::value on undefined: " + error().reason);
    return std::get<T>(state_);
  }
  const T& operator*() const { return value(); }
  const T* operator->() const { return &value(); }

  const Undefined& error() const { return std::get<Undefined>(state_); }

  std::optional<T> to_optional() const {
    if (has_value()) return std::get<T>(state_);
    return std::nullopt;
  }

 private:
  std::variant<T, Undefined> state_;
};

// A set-valued computation grew beyond Params::budget elements or nodes.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error("budget exceeded: " + what) {}
};

// Normalization ran out of fuel.
class Divergence : public std::runtime_error {
 public:
  explicit Divergence(const std::string& what) : std::runtime_error("divergence: " + what) {}
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace lambdadelta
