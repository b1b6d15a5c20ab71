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

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hrse/asdt.hpp"
#include "hrse/core/cost.hpp"
#include "hrse/core/error.hpp"
#include "hrse/core/serialize.hpp"
#include "hrse/core/tree.hpp"

namespace hrse::baselines {

struct SearchOptions {
  /// Also admit non-leaves with a single child. Such trees are strictly
  /// dominated (the child can replace its parent), so they are off by default.
  bool include_single_child = false;
};

/**
 * Exact minimum of the leaf term (sum over leaves of 2^depth, in units of
 * delta) over valid trees: a non-leaf of size s has at least two children
 * with distinct sizes in 1..s-1, and sizes 1 and 2 are leaves.
 *
 * best(s, t) is the optimum for a subtree of root size s with t leaves. The
 * choice of child sizes is a 0/1 knapsack over sizes 1..s-1; the knapsack
 * table after sizes 1..j serves every parent of size j + 1, so the whole
 * table costs O(S * T^2).
 */
class LeafCostTable {
 public:
  static constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;

  LeafCostTable(int max_size, int max_leaves, SearchOptions opts = {})
      : max_size_(max_size), max_leaves_(max_leaves), opts_(opts) {
    if (max_size < 1 || max_leaves < 1) throw InvalidArgument("table bounds must be positive");
    best_.assign(max_size + 1, std::vector<Cost>(max_leaves + 1, kInf));
    // knap_[j][t][c]: sizes 1..j considered, t leaves placed, c children (capped at 2).
    knap_.assign(max_size, Layer(max_leaves + 1, {kInf, kInf, kInf}));
    pick_.assign(max_size, PickLayer(max_leaves + 1, {Pick{}, Pick{}, Pick{}}));
    knap_[0][0][0] = 0;

    for (int s = 1; s <= max_size; ++s) {
      best_[s][1] = 1;
      if (s >= 3) {
        for (int t = 2; t <= max_leaves; ++t) best_[s][t] = finish(knap_[s - 1][t]);
      }
      if (s < max_size) extend(s);
    }
  }

  Cost best(int size, int leaves) const {
    if (size < 1 || size > max_size_ || leaves < 1 || leaves > max_leaves_) return kInf;
    return best_[size][leaves];
  }

  /** A tree attaining best(size, leaves); throws if infeasible. */
  HrseTree witness(int size, int leaves) const {
    if (best(size, leaves) >= kInf) throw InvalidArgument("no valid tree for these bounds");
    HrseTree tree(size);
    build(tree, tree.root(), size, leaves);
    return tree;
  }

 private:
  using Cell = std::array<Cost, 3>;
  using Layer = std::vector<Cell>;
  struct Pick {
    int leaves = 0;  // 0: size j unused
    int prev_count = 0;
  };
  using PickLayer = std::vector<std::array<Pick, 3>>;

  Cost finish(const Cell& cell) const {
    Cost v = cell[2];
    if (opts_.include_single_child) v = std::min(v, cell[1]);
    return v;
  }

  // Adds size j as an optional child to the knapsack (layer j-1 -> j).
  void extend(int j) {
    const Layer& prev = knap_[j - 1];
    Layer& cur = knap_[j];
    auto& pick = pick_[j];
    cur = prev;
    for (int t = 0; t <= max_leaves_; ++t) {
      for (int c = 0; c < 3; ++c) pick[t][c] = Pick{0, c};
    }
    for (int t_prev = 0; t_prev <= max_leaves_; ++t_prev) {
      for (int c = 0; c < 3; ++c) {
        if (prev[t_prev][c] >= kInf) continue;
        const int c_new = std::min(c + 1, 2);
        for (int tj = 1; t_prev + tj <= max_leaves_; ++tj) {
          if (best_[j][tj] >= kInf) continue;
          const Cost v = prev[t_prev][c] + 2 * best_[j][tj];
          if (v < cur[t_prev + tj][c_new]) {
            cur[t_prev + tj][c_new] = v;
            pick[t_prev + tj][c_new] = Pick{tj, c};
          }
        }
      }
    }
  }

  void build(HrseTree& tree, NodeId node, int size, int leaves) const {
    if (leaves == 1) return;
    const Cell& cell = knap_[size - 1][leaves];
    int c = (cell[2] <= cell[1] || !opts_.include_single_child) ? 2 : 1;
    int t = leaves;
    std::vector<std::pair<int, int>> children;  // (size, leaves), decreasing size
    for (int j = size - 1; j >= 1 && t > 0; --j) {
      const Pick& p = pick_[j][t][c];
      if (p.leaves == 0) continue;
      children.emplace_back(j, p.leaves);
      t -= p.leaves;
      c = p.prev_count;
    }
    for (const auto& [cs, cl] : children) build(tree, tree.add_child(node, cs), cs, cl);
  }

  int max_size_;
  int max_leaves_;
  SearchOptions opts_;
  std::vector<std::vector<Cost>> best_;
  std::vector<Layer> knap_;
  std::vector<PickLayer> pick_;
};

struct OptimalityCertificate {
  int m = 0;
  int k = 0;
  bool root_bonus = false;
  Cost min_leaf_cost = 0;  // units of delta
  HrseTree witness{1};
  Cost asdt_leaf_cost = 0;

  bool asdt_optimal() const { return asdt_leaf_cost == min_leaf_cost; }

  std::string to_text() const {
    std::ostringstream os;
    os << "m=" << m << " k=" << k << " root_bonus=" << (root_bonus ? 1 : 0) << '\n'
       << "min_leaf_cost=" << min_leaf_cost << '\n'
       << "asdt_leaf_cost=" << asdt_leaf_cost << '\n'
       << "asdt_optimal=" << (asdt_optimal() ? "yes" : "no") << '\n'
       << "witness:\n"
       << serialize(witness);
    return os.str();
  }
};

inline OptimalityCertificate min_leaf_cost(int m, int k, bool root_bonus, SearchOptions opts = {}) {
  if (m < 1 || k < 1) throw InvalidArgument("need m >= 1 and k >= 1");
  const auto cap = asdt::capacity(k, root_bonus);
  if (static_cast<std::uint64_t>(m) > cap) throw asdt::CapacityExceeded(m, k, cap);
  const int root_size = root_bonus ? k + 1 : k;
  LeafCostTable table(root_size, m, opts);
  OptimalityCertificate cert;
  cert.m = m;
  cert.k = k;
  cert.root_bonus = root_bonus;
  cert.min_leaf_cost = table.best(root_size, m);
  cert.witness = table.witness(root_size, m);
  cert.asdt_leaf_cost = leaf_cost(asdt::build({m, k, root_bonus}).tree);
  return cert;
}

class LimitExceeded : public Error {
 public:
  explicit LimitExceeded(std::size_t limit)
      : Error("more than " + std::to_string(limit) + " trees"), limit_(limit) {}
  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

/** Tree shape with children in decreasing size order. */
struct Shape {
  int size = 0;
  std::vector<Shape> children;
};

namespace detail {

class ShapeEnumerator {
 public:
  ShapeEnumerator(std::size_t limit, SearchOptions opts) : limit_(limit), opts_(opts) {}

  const std::vector<Shape>& shapes(int size, int leaves) {
    const auto key = std::make_pair(size, leaves);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<Shape> out;
    if (leaves == 1) out.push_back(Shape{size, {}});
    const int min_children = opts_.include_single_child ? 1 : 2;
    if (size >= 3 && leaves >= (opts_.include_single_child ? 1 : 2)) {
      std::vector<Shape> chosen;
      collect(size - 1, leaves, min_children, chosen, size, out);
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  // Picks children with sizes <= max_size in decreasing order.
  void collect(int max_size, int remaining, int min_children, std::vector<Shape>& chosen,
               int parent_size, std::vector<Shape>& out) {
    if (remaining == 0) {
      if (static_cast<int>(chosen.size()) >= min_children) {
        out.push_back(Shape{parent_size, chosen});
        if (out.size() > limit_) throw LimitExceeded(limit_);
      }
      return;
    }
    for (int s = max_size; s >= 1; --s) {
      for (int t = 1; t <= remaining; ++t) {
        const std::vector<Shape>& options = shapes(s, t);  // std::map keeps references valid
        for (const auto& sub : options) {
          chosen.push_back(sub);
          collect(s - 1, remaining - t, min_children, chosen, parent_size, out);
          chosen.pop_back();
        }
      }
    }
  }

  std::size_t limit_;
  SearchOptions opts_;
  std::map<std::pair<int, int>, std::vector<Shape>> memo_;
};

inline void attach(HrseTree& tree, NodeId node, const Shape& shape) {
  for (const auto& c : shape.children) attach(tree, tree.add_child(node, c.size), c);
}

}  // namespace detail

inline HrseTree to_tree(const Shape& shape) {
  HrseTree tree(shape.size);
  detail::attach(tree, tree.root(), shape);
  return tree;
}

/**
 * Every structurally distinct valid tree with root size `root_size` and `m`
 * leaves (child lists canonicalized by decreasing size). Throws
 * LimitExceeded beyond `limit` trees.
 */
inline std::vector<HrseTree> enumerate_valid_trees_by_root(
    int m, int root_size, std::size_t limit, SearchOptions opts = {}) {
  if (m < 1 || root_size < 1) throw InvalidArgument("need m >= 1 and a positive root size");
  detail::ShapeEnumerator en(limit, opts);
  const auto shapes = en.shapes(root_size, m);
  std::vector<HrseTree> out;
  out.reserve(shapes.size());
  for (const auto& s : shapes) out.push_back(to_tree(s));
  return out;
}

inline std::vector<HrseTree> enumerate_valid_trees(
    int m, int k, std::size_t limit, bool root_bonus = false, SearchOptions opts = {}) {
  return enumerate_valid_trees_by_root(m, root_bonus ? k + 1 : k, limit, opts);
}

}  // namespace hrse::baselines
