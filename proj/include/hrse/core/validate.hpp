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

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hrse/core/tree.hpp"

namespace hrse {

enum class ViolationKind {
  SizeNotPositive,      // s(v) < 1
  ChildExceedsParent,   // s(child) > s(parent)
  ChildEqualsParent,    // s(child) == s(parent), only allowed when lenient
  DuplicateSiblingSize, // two children of one node share a size
  SmallNodeNotLeaf,     // s(v) in {1, 2} with children
};

inline const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::SizeNotPositive: return "size-not-positive";
    case ViolationKind::ChildExceedsParent: return "child-exceeds-parent";
    case ViolationKind::ChildEqualsParent: return "child-equals-parent";
    case ViolationKind::DuplicateSiblingSize: return "duplicate-sibling-size";
    case ViolationKind::SmallNodeNotLeaf: return "small-node-not-leaf";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  std::vector<NodeId> nodes;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const {
    for (const auto& v : violations) {
      if (v.kind == kind) return true;
    }
    return false;
  }
  std::string to_string() const {
    std::ostringstream os;
    for (const auto& v : violations) os << to_string_line(v) << '\n';
    return os.str();
  }

 private:
  static std::string to_string_line(const Violation& v) {
    std::ostringstream os;
    os << hrse::to_string(v.kind) << " [";
    for (std::size_t i = 0; i < v.nodes.size(); ++i) {
      if (i) os << ',';
      os << v.nodes[i];
    }
    os << "] " << v.message;
    return os.str();
  }
};

struct ValidateOptions {
  /// Accept s(child) == s(parent), which the size-monotonicity rule permits
  /// literally but no construction here produces.
  bool allow_equal_parent_size = false;
};

/**
 * Checks the size rules: every size >= 1, child sizes at most (strictly below
 * unless lenient) the parent size, sibling sizes pairwise distinct, and nodes
 * of size 1 or 2 are leaves.
 *
 * The tree type keeps depth and out-degree consistent with its edges, so any
 * disagreement there is a StructuralError rather than a violation.
 */
inline ValidationReport validate(const HrseTree& tree, ValidateOptions opts = {}) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::vector<NodeId> nodes, std::string msg) {
    report.violations.push_back({kind, std::move(nodes), std::move(msg)});
  };

  for (NodeId v : tree.preorder()) {
    const auto& a = tree.attr(v);
    const auto children = tree.children(v);
    if (a.out_degree != static_cast<int>(children.size())) {
      throw StructuralError("out-degree mismatch at node " + std::to_string(v));
    }
    const auto parent = tree.parent(v);
    const int expected_depth = parent ? tree.depth(*parent) + 1 : 0;
    if (a.depth != expected_depth) {
      throw StructuralError("depth mismatch at node " + std::to_string(v));
    }

    if (a.size < 1) {
      add(ViolationKind::SizeNotPositive, {v},
          "size " + std::to_string(a.size) + " is not positive");
    }
    if (parent) {
      const int ps = tree.size(*parent);
      if (a.size > ps) {
        add(ViolationKind::ChildExceedsParent, {*parent, v},
            "child size " + std::to_string(a.size) + " exceeds parent size " +
                std::to_string(ps));
      } else if (a.size == ps && !opts.allow_equal_parent_size) {
        add(ViolationKind::ChildEqualsParent, {*parent, v},
            "child size equals parent size " + std::to_string(ps));
      }
    }
    if ((a.size == 1 || a.size == 2) && !children.empty()) {
      add(ViolationKind::SmallNodeNotLeaf, {v},
          "node of size " + std::to_string(a.size) + " has " +
              std::to_string(children.size()) + " children");
    }
    std::map<int, std::vector<NodeId>> by_size;
    for (NodeId c : children) by_size[tree.size(c)].push_back(c);
    for (auto& [size, ids] : by_size) {
      if (ids.size() < 2) continue;
      std::vector<NodeId> nodes{v};
      nodes.insert(nodes.end(), ids.begin(), ids.end());
      add(ViolationKind::DuplicateSiblingSize, std::move(nodes),
          std::to_string(ids.size()) + " siblings share size " + std::to_string(size));
    }
  }
  return report;
}

/** Thrown when a tree that must be valid is not. */
class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report)
      : Error("invalid tree:\n" + report.to_string()), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

}  // namespace hrse
