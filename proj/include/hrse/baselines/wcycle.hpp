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

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "hrse/core/error.hpp"
#include "hrse/core/tree.hpp"
#include "hrse/core/validate.hpp"

namespace hrse::baselines {

// Level-parameterized W-cycle structure, reconstructed from its observable
// behavior: every function sits at depth exactly `level`. Above the last
// level the functions are split into two near-equal groups per level; nodes
// at depth level-1 hold their functions as direct leaf children. Child sizes
// follow the descending rule s-1, s-2, ... used by the ASDT builder.

struct WcycleSpec {
  int m = 1;
  int k = 1;
  int level = 1;
  bool root_bonus = false;
};

struct Infeasible {
  NodeId node = 0;  // id the blocking node has in the partial tree
  int node_size = 0;
  int required = 0;   // child slots needed
  int available = 0;  // child slots the size permits (s - 1)

  std::string to_string() const {
    return "node " + std::to_string(node) + " (size " + std::to_string(node_size) + ") needs " +
           std::to_string(required) + " children but only " + std::to_string(available) +
           " fit";
  }
};

struct WcycleResult {
  std::optional<HrseTree> tree;
  std::optional<Infeasible> infeasible;
  /// Size rules checked on the built tree. W-cycle trees may put a single
  /// child under a size-2 node; such trees are usable circuits but flagged.
  ValidationReport validation;

  bool feasible() const { return tree.has_value(); }
  bool hrse_valid() const { return feasible() && validation.ok(); }
};

inline WcycleResult build_wcycle(const WcycleSpec& spec) {
  if (spec.m < 1 || spec.k < 1 || spec.level < 1) {
    throw InvalidArgument("W-cycle needs m >= 1, k >= 1 and level >= 1");
  }
  WcycleResult out;
  HrseTree tree(spec.root_bonus ? spec.k + 1 : spec.k);
  struct Pending {
    NodeId node;
    int functions;
    int levels_left;
  };
  std::deque<Pending> queue{{tree.root(), spec.m, spec.level}};
  while (!queue.empty()) {
    const Pending p = queue.front();
    queue.pop_front();
    const int s = tree.size(p.node);
    std::vector<int> groups;
    if (p.levels_left == 1) {
      groups.assign(p.functions, 1);
    } else if (p.functions >= 2) {
      groups = {(p.functions + 1) / 2, p.functions / 2};
    } else {
      groups = {p.functions};
    }
    const int required = static_cast<int>(groups.size());
    if (required > s - 1) {
      out.infeasible = Infeasible{p.node, s, required, std::max(s - 1, 0)};
      return out;
    }
    for (int i = 0; i < required; ++i) {
      const NodeId c = tree.add_child(p.node, s - 1 - i);
      if (p.levels_left > 1) queue.push_back({c, groups[i], p.levels_left - 1});
    }
  }
  out.validation = validate(tree);
  out.tree = std::move(tree);
  return out;
}

}  // namespace hrse::baselines
