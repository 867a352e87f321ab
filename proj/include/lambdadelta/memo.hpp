#pragma once

#include <cstddef>
#include <memory>
#include <unordered_map>

namespace lambdadelta::detail {

// Bounded memo table.  Values are handed out as shared pointers so that a
// reset while a caller still holds a result is harmless.
template <class Key, class Value, class Hash>
class MemoTable {
 public:
  explicit MemoTable(std::size_t capacity) : capacity_(capacity) {}

  std::shared_ptr<const Value> find(const Key& key) const {
    auto it = map_.find(key);
    return it == map_.end() ? nullptr : it->second;
  }

  std::shared_ptr<const Value> insert(const Key& key, Value value) {
    if (map_.size() >= capacity_) map_.clear();
    auto ptr = std::make_shared<const Value>(std::move(value));
    map_.emplace(key, ptr);
    return ptr;
  }

 private:
  std::size_t capacity_;
  std::unordered_map<Key, std::shared_ptr<const Value>, Hash> map_;
};

}  // namespace lambdadelta::detail
