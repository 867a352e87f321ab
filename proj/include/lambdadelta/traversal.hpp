#pragma once

// Certification that the graph reachable from a root is finite and acyclic.
// With finite branching this is equivalent to the absence of infinite paths,
// i.e. to strong normalization of the step relation that generates the graph.

#include <cstddef>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lambdadelta/partial.hpp"

namespace lambdadelta {

enum class CertStatus { Ok, Cycle, Budget };

inline const char* to_string(CertStatus s) {
  switch (s) {
    case CertStatus::Ok: return "ok";
    case CertStatus::Cycle: return "cycle";
    case CertStatus::Budget: return "budget";
  }
  return "?";
}

template <class Node>
struct Certificate {
  CertStatus status = CertStatus::Ok;
  std::size_t nodes = 0;       // distinct nodes discovered
  std::size_t edges = 0;       // edges examined
  std::size_t max_depth = 0;   // longest path from the root (Ok only)
  std::vector<Node> cycle;     // on Cycle: a closed path, first node repeated last
  std::string reason;          // on Budget

  bool ok() const { return status == CertStatus::Ok; }
};

// Iterative depth-first search with white/grey/black colouring.  `succ` returns
// the successors of a node in the order they should be explored and may throw
// BudgetExceeded.  `on_edge`, when set, sees every edge exactly once in a
// deterministic order.
//
// A Certifier may be reused across roots: nodes finished by an earlier call are
// treated as already certified, and only newly discovered nodes are counted.
template <class Node, class Hash>
class Certifier {
 public:
  using Successors = std::function<std::vector<Node>(const Node&)>;
  using EdgeSink = std::function<void(const Node&, const Node&)>;

  Certifier(Successors succ, std::size_t budget) : succ_(std::move(succ)), budget_(budget) {}

  Certificate<Node> certify(const Node& root, const EdgeSink& on_edge = {}) {
    Certificate<Node> out;
    if (auto it = state_.find(root); it != state_.end() && it->second.black) {
      out.max_depth = it->second.depth;
      return out;
    }
    struct Frame {
      Node node;
      std::vector<Node> next;
      std::size_t pos = 0;
      std::size_t depth = 0;
    };
    std::vector<Frame> stack;
    std::vector<Node> grey;  // nodes made grey during this call, for rollback
    auto enter = [&](const Node& n) -> bool {
      if (++out.nodes > budget_) {
        out.status = CertStatus::Budget;
        out.reason = "more than " + std::to_string(budget_) + " nodes";
        return false;
      }
      try {
        stack.push_back(Frame{n, succ_(n), 0, 0});
      } catch (const BudgetExceeded& e) {
        out.status = CertStatus::Budget;
        out.reason = e.what();
        return false;
      }
      state_[n] = Mark{false, 0};
      grey.push_back(n);
      return true;
    };
    auto abort = [&] {
      // grey nodes are not certified; forget them so a later call starts clean
      for (const auto& g : grey) {
        auto it = state_.find(g);
        if (it != state_.end() && !it->second.black) state_.erase(it);
      }
      return out;
    };
    if (!enter(root)) return abort();
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.pos == top.next.size()) {
        Mark& m = state_[top.node];
        m.black = true;
        m.depth = top.depth;
        const std::size_t d = top.depth + 1;
        stack.pop_back();
        if (!stack.empty() && d > stack.back().depth) stack.back().depth = d;
        continue;
      }
      const Node child = top.next[top.pos++];
      ++out.edges;
      if (on_edge) on_edge(top.node, child);
      auto it = state_.find(child);
      if (it == state_.end()) {
        if (!enter(child)) return abort();
        continue;
      }
      if (it->second.black) {
        if (it->second.depth + 1 > top.depth) top.depth = it->second.depth + 1;
        continue;
      }
      // grey: a back edge closes a cycle through the current stack
      out.status = CertStatus::Cycle;
      std::size_t k = stack.size();
      while (k > 0 && !(stack[k - 1].node == child)) --k;
      for (std::size_t j = k == 0 ? 0 : k - 1; j < stack.size(); ++j) out.cycle.push_back(stack[j].node);
      out.cycle.push_back(child);
      return abort();
    }
    out.max_depth = state_[root].depth;
    return out;
  }

  std::size_t finished() const { return state_.size(); }

 private:
  struct Mark {
    bool black = false;
    std::size_t depth = 0;
  };
  Successors succ_;
  std::size_t budget_;
  std::unordered_map<Node, Mark, Hash> state_;
};

// One-shot certification with exact counts.
template <class Node, class Hash>
Certificate<Node> certify_acyclic(const Node& root, typename Certifier<Node, Hash>::Successors succ,
                                  std::size_t budget,
                                  const typename Certifier<Node, Hash>::EdgeSink& on_edge = {}) {
  Certifier<Node, Hash> c(std::move(succ), budget);
  return c.certify(root, on_edge);
}

}  // namespace lambdadelta
