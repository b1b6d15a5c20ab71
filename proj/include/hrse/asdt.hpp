// Copyright 2026 The hrse-oracle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hrse/core/error.hpp"
#include "hrse/core/tree.hpp"

/// Adaptive space-depth trade-off construction: grows a tree for m functions
/// under a k-qubit budget, always expanding at minimum depth and, among equal
/// depths, at maximum size.
namespace hrse::asdt {

struct BuildSpec {
  int m = 1;  // constraint functions
  int k = 1;  // auxiliary-qubit budget
  /// Treat the root as size k + 1: its merge lands on the separate output
  /// qubit (XOR mode) or is a phase flip (phase mode), so it needs no pool
  /// qubit of its own.
  bool root_bonus = false;

  int root_size() const { return root_bonus ? k + 1 : k; }
};

enum class NodeClass { SaturatedNonLeaf, UnsaturatedNonLeaf, CandidateLeaf, ForcedLeaf };

inline const char* to_string(NodeClass c) {
  switch (c) {
    case NodeClass::SaturatedNonLeaf: return "saturated";
    case NodeClass::UnsaturatedNonLeaf: return "unsaturated";
    case NodeClass::CandidateLeaf: return "candidate";
    case NodeClass::ForcedLeaf: return "forced-leaf";
  }
  return "?";
}

enum class Action { SplitLeaf, AddChild };

struct BuildStep {
  NodeId node = 0;
  int node_size = 0;
  int node_depth = 0;
  Action action = Action::SplitLeaf;
  std::vector<int> child_sizes;

  friend bool operator==(const BuildStep&, const BuildStep&) = default;
};

struct BuildTrace {
  std::vector<BuildStep> steps;

  /** One line per step: `split node=0 size=5 depth=0 -> 4 3`. */
  std::string to_text() const {
    std::ostringstream os;
    for (const auto& s : steps) {
      os << (s.action == Action::SplitLeaf ? "split" : "add") << " node=" << s.node
         << " size=" << s.node_size << " depth=" << s.node_depth << " ->";
      for (int c : s.child_sizes) os << ' ' << c;
      os << '\n';
    }
    return os.str();
  }

  friend bool operator==(const BuildTrace&, const BuildTrace&) = default;
};

struct BuildResult {
  HrseTree tree;
  BuildTrace trace;
};

class CapacityExceeded : public Error {
 public:
  CapacityExceeded(int m, int k, std::uint64_t capacity)
      : Error(
            "m=" + std::to_string(m) + " functions exceed the capacity " + std::to_string(capacity) +
            " of k=" + std::to_string(k) + " auxiliary qubits"),
        m_(m),
        k_(k),
        capacity_(capacity) {}
  int m() const { return m_; }
  int k() const { return k_; }
  std::uint64_t capacity() const { return capacity_; }

 private:
  int m_, k_;
  std::uint64_t capacity_;
};

/**
 * Largest leaf count of a tree whose root has `size`: L(1) = L(2) = 1 and
 * L(s) = L(1) + ... + L(s-1). Saturates at the uint64 maximum.
 */
inline std::uint64_t max_leaves(int size) {
  if (size < 1) return 0;
  std::uint64_t sum = 0;  // L(1) + ... + L(s-1)
  std::uint64_t cur = 1;
  for (int s = 1; s <= size; ++s) {
    cur = s <= 2 ? 1 : sum;
    if (s < size) {
      sum = sum > std::numeric_limits<std::uint64_t>::max() - cur
                ? std::numeric_limits<std::uint64_t>::max()
                : sum + cur;
    }
  }
  return cur;
}

inline std::uint64_t capacity(int k, bool root_bonus) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  return max_leaves(root_bonus ? k + 1 : k);
}

inline NodeClass classify(const NodeAttr& a) {
  if (a.out_degree == 0) return a.size > 2 ? NodeClass::CandidateLeaf : NodeClass::ForcedLeaf;
  if (a.size <= 2 || a.out_degree >= a.size - 1) return NodeClass::SaturatedNonLeaf;
  return NodeClass::UnsaturatedNonLeaf;
}

/** True iff no non-leaf can accept another child (vacuous for one leaf). */
inline bool is_saturated_tree(const HrseTree& tree) {
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    if (classify(tree.attr(v)) == NodeClass::UnsaturatedNonLeaf) return false;
  }
  return true;
}

namespace detail {

// Candidate leaves bucketed by depth then size. Buckets fill in id order, so
// the front of a bucket is its lowest id. Both the minimum candidate depth
// and the sizes (at most the root size) only move within bounded ranges,
// which keeps each selection O(k).
class CandidatePool {
 public:
  explicit CandidatePool(int max_size) : max_size_(max_size) {}

  void push(NodeId v, int depth, int size) {
    if (static_cast<std::size_t>(depth) >= buckets_.size()) {
      buckets_.resize(depth + 1, std::vector<std::deque<NodeId>>(max_size_ + 1));
      counts_.resize(depth + 1, 0);
    }
    buckets_[depth][size].push_back(v);
    ++counts_[depth];
  }

  std::optional<NodeId> pop_best() {
    while (min_depth_ < counts_.size() && counts_[min_depth_] == 0) ++min_depth_;
    if (min_depth_ >= counts_.size()) return std::nullopt;
    auto& by_size = buckets_[min_depth_];
    for (int s = max_size_; s >= 0; --s) {
      if (!by_size[s].empty()) {
        const NodeId v = by_size[s].front();
        by_size[s].pop_front();
        --counts_[min_depth_];
        return v;
      }
    }
    return std::nullopt;
  }

 private:
  int max_size_;
  std::size_t min_depth_ = 0;
  std::vector<std::vector<std::deque<NodeId>>> buckets_;
  std::vector<std::size_t> counts_;
};

}  // namespace detail

/**
 * Builds the tree for `spec`. Each iteration adds one leaf: while some node
 * is unsaturated it receives a child of size s - kappa - 1; otherwise the
 * candidate leaf of minimum depth (then maximum size, then lowest id) splits
 * into children of sizes s - 1 and s - 2.
 */
inline BuildResult build(const BuildSpec& spec) {
  if (spec.m < 1 || spec.k < 1) {
    throw InvalidArgument(
        "invalid spec: need m >= 1 and k >= 1 (got m=" + std::to_string(spec.m) +
        ", k=" + std::to_string(spec.k) + ")");
  }
  const auto cap = capacity(spec.k, spec.root_bonus);
  if (static_cast<std::uint64_t>(spec.m) > cap) throw CapacityExceeded(spec.m, spec.k, cap);

  const int root_size = spec.root_size();
  BuildResult out{HrseTree(root_size), {}};
  auto& tree = out.tree;
  detail::CandidatePool pool(root_size);
  auto offer = [&](NodeId v) {
    if (tree.size(v) > 2) pool.push(v, tree.depth(v), tree.size(v));
  };
  offer(tree.root());

  constexpr NodeId kNone = std::numeric_limits<NodeId>::max();
  NodeId unsaturated = kNone;  // at most one exists at a time
  for (int leaves = 1; leaves < spec.m; ++leaves) {
    BuildStep step;
    if (unsaturated != kNone) {
      const NodeId v = unsaturated;
      const int child_size = tree.size(v) - tree.out_degree(v) - 1;
      step = {v, tree.size(v), tree.depth(v), Action::AddChild, {child_size}};
      offer(tree.add_child(v, child_size));
      if (classify(tree.attr(v)) != NodeClass::UnsaturatedNonLeaf) unsaturated = kNone;
    } else {
      const auto picked = pool.pop_best();
      if (!picked) throw CapacityExceeded(spec.m, spec.k, cap);  // unreachable below capacity
      const NodeId v = *picked;
      const int s = tree.size(v);
      step = {v, s, tree.depth(v), Action::SplitLeaf, {s - 1, s - 2}};
      offer(tree.add_child(v, s - 1));
      offer(tree.add_child(v, s - 2));
      if (classify(tree.attr(v)) == NodeClass::UnsaturatedNonLeaf) unsaturated = v;
    }
    out.trace.steps.push_back(std::move(step));
  }
  return out;
}

/**
 * Re-applies a trace to a fresh root. `on_step` (if given) sees the tree
 * after every step. Throws InvalidArgument when a step does not fit the tree.
 */
template <typename OnStep>
HrseTree replay(int root_size, const BuildTrace& trace, OnStep&& on_step) {
  HrseTree tree(root_size);
  for (const auto& step : trace.steps) {
    if (step.node >= tree.node_count()) {
      throw InvalidArgument("trace refers to unknown node " + std::to_string(step.node));
    }
    const bool leaf = tree.is_leaf(step.node);
    if ((step.action == Action::SplitLeaf) != leaf) {
      throw InvalidArgument("trace action does not match node " + std::to_string(step.node));
    }
    for (int s : step.child_sizes) tree.add_child(step.node, s);
    on_step(static_cast<const HrseTree&>(tree));
  }
  return tree;
}

inline HrseTree replay(int root_size, const BuildTrace& trace) {
  return replay(root_size, trace, [](const HrseTree&) {});
}

}  // namespace hrse::asdt
