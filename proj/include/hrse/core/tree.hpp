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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hrse/core/cost_expr.hpp"
#include "hrse/core/error.hpp"

namespace hrse {

using NodeId = std::uint32_t;

/** Per-node attribute quintuple (size, depth, out-degree, cost, leaves). */
struct NodeAttr {
  int size = 0;
  int depth = 0;
  int out_degree = 0;
  std::optional<CostExpr> cost;  // unset until evaluation
  std::optional<int> leaves;     // unset until evaluation

  friend bool operator==(const NodeAttr&, const NodeAttr&) = default;
};

/**
 * Rooted tree of oracle computation units.
 *
 * Nodes are stored densely by id. depth and out_degree are maintained by the
 * tree itself, so they always agree with the edge structure. Children keep
 * insertion order.
 */
class HrseTree {
 public:
  explicit HrseTree(int root_size) { nodes_.push_back(Node{{root_size, 0, 0, {}, {}}, {}, {}}); }

  /**
   * Builds a tree from a parent array (`parents[i]` empty for the root).
   * Children are attached in `attach_order` (a permutation of the ids),
   * or in increasing id order when it is empty.
   */
  static HrseTree from_parents(
      std::span<const int> sizes, std::span<const std::optional<NodeId>> parents,
      std::span<const NodeId> attach_order = {}) {
    if (sizes.size() != parents.size()) {
      throw StructuralError("size and parent arrays differ in length");
    }
    if (sizes.empty()) throw StructuralError("tree has no nodes");
    std::optional<NodeId> root;
    for (std::size_t i = 0; i < parents.size(); ++i) {
      if (!parents[i]) {
        if (root) {
          throw StructuralError(
              "multiple roots: nodes " + std::to_string(*root) + " and " +
              std::to_string(i));
        }
        root = static_cast<NodeId>(i);
      } else if (*parents[i] >= sizes.size()) {
        throw StructuralError(
            "node " + std::to_string(i) + " has unknown parent " +
            std::to_string(*parents[i]));
      }
    }
    if (!root) throw StructuralError("no root (every node has a parent)");

    HrseTree tree;
    tree.root_ = *root;
    tree.nodes_.resize(sizes.size());
    if (!attach_order.empty() && attach_order.size() != sizes.size()) {
      throw StructuralError("attach order is not a permutation of the node ids");
    }
    std::vector<bool> attached(sizes.size(), false);
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      const NodeId i = attach_order.empty() ? static_cast<NodeId>(k) : attach_order[k];
      if (i >= sizes.size() || attached[i]) {
        throw StructuralError("attach order is not a permutation of the node ids");
      }
      attached[i] = true;
      tree.nodes_[i].attr.size = sizes[i];
      tree.nodes_[i].parent = parents[i];
      if (parents[i]) tree.nodes_[*parents[i]].children.push_back(i);
    }
    // Depth assignment from the root also detects unreachable nodes (cycles).
    std::vector<NodeId> stack{*root};
    std::size_t reached = 0;
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      ++reached;
      auto& node = tree.nodes_[v];
      node.attr.out_degree = static_cast<int>(node.children.size());
      for (NodeId c : node.children) {
        tree.nodes_[c].attr.depth = node.attr.depth + 1;
        stack.push_back(c);
      }
    }
    if (reached != sizes.size()) {
      throw StructuralError("cycle: some nodes are not reachable from the root");
    }
    return tree;
  }

  NodeId add_child(NodeId parent, int size) {
    check(parent);
    const auto id = static_cast<NodeId>(nodes_.size());
    const int depth = nodes_[parent].attr.depth + 1;
    nodes_.push_back(Node{{size, depth, 0, {}, {}}, parent, {}});
    nodes_[parent].children.push_back(id);
    nodes_[parent].attr.out_degree += 1;
    return id;
  }

  NodeId root() const { return root_; }
  std::size_t node_count() const { return nodes_.size(); }

  const NodeAttr& attr(NodeId v) const {
    check(v);
    return nodes_[v].attr;
  }
  int size(NodeId v) const { return attr(v).size; }
  int depth(NodeId v) const { return attr(v).depth; }
  int out_degree(NodeId v) const { return attr(v).out_degree; }
  bool is_leaf(NodeId v) const { return attr(v).out_degree == 0; }

  std::span<const NodeId> children(NodeId v) const {
    check(v);
    return nodes_[v].children;
  }
  std::optional<NodeId> parent(NodeId v) const {
    check(v);
    return nodes_[v].parent;
  }

  /** Stores evaluation results on a node. */
  void annotate(NodeId v, CostExpr cost, int leaves) {
    check(v);
    nodes_[v].attr.cost = std::move(cost);
    nodes_[v].attr.leaves = leaves;
  }
  void clear_annotations() {
    for (auto& n : nodes_) {
      n.attr.cost.reset();
      n.attr.leaves.reset();
    }
  }

  /** Leaf ids in increasing id order (construction order). */
  std::vector<NodeId> leaves() const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < nodes_.size(); ++v) {
      if (nodes_[v].children.empty()) out.push_back(v);
    }
    return out;
  }
  std::size_t leaf_count() const { return leaves().size(); }

  std::vector<NodeId> preorder() const {
    std::vector<NodeId> out;
    out.reserve(nodes_.size());
    std::vector<NodeId> stack{root_};
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      out.push_back(v);
      const auto& ch = nodes_[v].children;
      for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
    }
    return out;
  }

  std::vector<NodeId> postorder() const {
    std::vector<NodeId> out;
    out.reserve(nodes_.size());
    // Reverse of a (node, children right-to-left) preorder.
    std::vector<NodeId> stack{root_};
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      out.push_back(v);
      for (NodeId c : nodes_[v].children) stack.push_back(c);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  int max_depth() const {
    int d = 0;
    for (const auto& n : nodes_) d = std::max(d, n.attr.depth);
    return d;
  }

  /**
   * Copy of this tree hung below a fresh root of size `root_size`. The new
   * root gets id 0 and every old id shifts by one; child order is kept.
   */
  HrseTree grafted_under(int root_size) const {
    HrseTree out;
    out.root_ = 0;
    out.nodes_.reserve(nodes_.size() + 1);
    out.nodes_.push_back(Node{{root_size, 0, 1, {}, {}}, {}, {root_ + 1}});
    for (const auto& n : nodes_) {
      Node copy = n;
      copy.attr.depth += 1;
      copy.attr.cost.reset();
      copy.attr.leaves.reset();
      copy.parent = n.parent ? *n.parent + 1 : 0;
      for (auto& c : copy.children) c += 1;
      out.nodes_.push_back(std::move(copy));
    }
    return out;
  }

  friend bool operator==(const HrseTree&, const HrseTree&) = default;

 private:
  struct Node {
    NodeAttr attr;
    std::optional<NodeId> parent;
    std::vector<NodeId> children;
    friend bool operator==(const Node&, const Node&) = default;
  };

  HrseTree() = default;

  void check(NodeId v) const {
    if (v >= nodes_.size()) {
      throw InvalidArgument("node id " + std::to_string(v) + " out of range");
    }
  }

  std::vector<Node> nodes_;
  NodeId root_ = 0;
};

}  // namespace hrse
