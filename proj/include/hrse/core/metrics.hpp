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
#include <numeric>
#include <ostream>
#include <string>

#include "hrse/core/tree.hpp"

namespace hrse {

/** Exact non-negative rational, kept in lowest terms. */
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Ratio of(std::int64_t num, std::int64_t den) {
    if (den == 0) return {0, 1};
    const auto g = std::gcd(num, den);
    return {num / g, den / g};
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend bool operator<(const Ratio& a, const Ratio& b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
  friend std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.to_string(); }
};

/**
 * Depth statistics. Which population the "average node depth" of a tree
 * refers to is not pinned down, so leaves, non-leaves and all nodes are all
 * reported. An empty population averages to 0.
 */
struct TreeMetrics {
  int leaf_count = 0;
  Ratio avg_leaf_depth;
  Ratio avg_nonleaf_depth;
  Ratio avg_all_node_depth;
  int max_depth = 0;

  friend bool operator==(const TreeMetrics&, const TreeMetrics&) = default;
};

inline TreeMetrics metrics(const HrseTree& tree) {
  std::int64_t leaf_sum = 0, leaf_n = 0, inner_sum = 0, inner_n = 0;
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    if (tree.is_leaf(v)) {
      leaf_sum += tree.depth(v);
      ++leaf_n;
    } else {
      inner_sum += tree.depth(v);
      ++inner_n;
    }
  }
  TreeMetrics m;
  m.leaf_count = static_cast<int>(leaf_n);
  m.avg_leaf_depth = Ratio::of(leaf_sum, leaf_n);
  m.avg_nonleaf_depth = Ratio::of(inner_sum, inner_n);
  m.avg_all_node_depth = Ratio::of(leaf_sum + inner_sum, leaf_n + inner_n);
  m.max_depth = tree.max_depth();
  return m;
}

}  // namespace hrse
