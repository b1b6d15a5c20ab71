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
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hrse/boolsys/encode.hpp"
#include "hrse/circuit/circuit.hpp"
#include "hrse/core/cost_expr.hpp"
#include "hrse/core/tree.hpp"

namespace hrse::synth {

using circuit::Qubit;

enum class Mode { Xor, Phase };

inline const char* to_string(Mode m) { return m == Mode::Xor ? "xor" : "phase"; }

inline Mode parse_mode(const std::string& s) {
  if (s == "xor") return Mode::Xor;
  if (s == "phase") return Mode::Phase;
  throw InvalidArgument("unknown oracle mode '" + s + "'");
}

class SizeMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Pool block of one node: qubits pool[base, base+size), result on the top
/// one. The root's result is virtual (output qubit or a phase flip).
struct NodeSlot {
  std::size_t base = 0;
  std::size_t size = 0;
  std::optional<Qubit> result;
};

/**
 * Qubits 0..n-1 hold the inputs, n..n+k-1 the pool, and n+k the output in
 * xor mode. Children of a node share its base, so a child of size s uses
 * the lowest s qubits of its parent's block and the sibling results land on
 * distinct qubits base+s-1.
 */
struct QubitLayout {
  std::size_t n = 0;
  std::size_t k = 0;
  Mode mode = Mode::Xor;
  /// Root size is k+1: the extra slot is the output qubit or the phase.
  bool root_bonus = false;
  std::vector<NodeSlot> slots;  // indexed by node id

  std::size_t width() const { return n + k + (mode == Mode::Xor ? 1 : 0); }
  Qubit input(std::size_t i) const { return static_cast<Qubit>(i); }
  Qubit pool(std::size_t i) const { return static_cast<Qubit>(n + i); }
  std::optional<Qubit> output() const {
    return mode == Mode::Xor ? std::optional<Qubit>(static_cast<Qubit>(n + k)) : std::nullopt;
  }
  std::vector<Qubit> inputs() const {
    std::vector<Qubit> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = input(i);
    return out;
  }
  /// Pool qubits of [base, base+size) that exist (the bonus slot does not).
  std::vector<Qubit> block(std::size_t base, std::size_t size) const {
    std::vector<Qubit> out;
    for (std::size_t i = base; i < base + size && i < k; ++i) out.push_back(pool(i));
    return out;
  }

  std::string to_text(const HrseTree& tree) const {
    std::ostringstream os;
    os << "layout mode=" << to_string(mode) << " n=" << n << " k=" << k << " width=" << width()
       << " root_bonus=" << (root_bonus ? 1 : 0) << "\n";
    os << "inputs q[0..." << (n - 1) << "]\n";
    if (k > 0) os << "pool q[" << n << "..." << (n + k - 1) << "]\n";
    if (auto o = output()) os << "output q[" << *o << "]\n";
    for (NodeId v : tree.preorder()) {
      const auto& s = slots[v];
      os << std::string(2 * static_cast<std::size_t>(tree.depth(v)), ' ') << "node " << v << " size=" << s.size
         << " block=pool[" << s.base << "," << (s.base + s.size) << ")";
      if (s.result) os << " result=q[" << *s.result << "]";
      else os << " result=" << (mode == Mode::Xor ? "output" : "phase");
      os << "\n";
    }
    return os.str();
  }
};

/**
 * Assigns pool blocks top-down. The root must have size k (result qubit
 * left idle) or k+1 (root bonus).
 */
inline QubitLayout allocate(const HrseTree& tree, std::size_t n, std::size_t k, Mode mode) {
  if (n < 1) throw InvalidArgument("need at least one input qubit");
  if (k < 1) throw InvalidArgument("need at least one pool qubit");
  const auto root_size = static_cast<std::size_t>(tree.size(tree.root()));
  QubitLayout L;
  L.n = n;
  L.k = k;
  L.mode = mode;
  if (root_size == k + 1) {
    L.root_bonus = true;
  } else if (root_size != k) {
    throw SizeMismatch("root size " + std::to_string(root_size) + " does not match k=" + std::to_string(k) +
                       " (expected k or k+1)");
  }
  L.slots.resize(tree.node_count());
  L.slots[tree.root()] = {0, root_size, std::nullopt};
  for (NodeId v : tree.preorder()) {
    const auto& parent = L.slots[v];
    for (NodeId c : tree.children(v)) {
      const auto s = static_cast<std::size_t>(tree.size(c));
      if (s < 1 || s >= parent.size) {
        throw SizeMismatch("child " + std::to_string(c) + " of size " + std::to_string(s) +
                           " does not fit below its parent");
      }
      L.slots[c] = {parent.base, s, L.pool(parent.base + s - 1)};
    }
  }
  // Phase mode evaluates a lone root leaf on the top pool qubit.
  if (mode == Mode::Phase && tree.is_leaf(tree.root())) L.slots[tree.root()].result = L.pool(k - 1);
  return L;
}

enum class LeafStrategy { ByIndex, CostDesc };

inline const char* to_string(LeafStrategy s) { return s == LeafStrategy::ByIndex ? "by_index" : "cost_desc"; }

inline LeafStrategy parse_leaf_strategy(const std::string& s) {
  if (s == "by_index") return LeafStrategy::ByIndex;
  if (s == "cost_desc") return LeafStrategy::CostDesc;
  throw InvalidArgument("unknown leaf assignment '" + s + "'");
}

struct LeafAssignment {
  LeafStrategy strategy = LeafStrategy::ByIndex;
  std::map<NodeId, std::size_t> equation_of;
};

/**
 * by_index pairs leaves in id order with equations in file order. cost_desc
 * gives the costliest indicators to the shallowest leaves.
 */
inline LeafAssignment assign_leaves(const HrseTree& tree, const boolsys::BooleanSystem& sys,
                                    LeafStrategy strategy = LeafStrategy::ByIndex) {
  auto leaves = tree.leaves();
  if (leaves.size() != sys.equations.size()) {
    throw InvalidArgument("tree has " + std::to_string(leaves.size()) + " leaves but the system has " +
                          std::to_string(sys.equations.size()) + " equations");
  }
  std::vector<std::size_t> eqs(sys.equations.size());
  for (std::size_t i = 0; i < eqs.size(); ++i) eqs[i] = i;
  if (strategy == LeafStrategy::CostDesc) {
    std::stable_sort(leaves.begin(), leaves.end(),
                     [&](NodeId a, NodeId b) { return tree.depth(a) < tree.depth(b); });
    std::stable_sort(eqs.begin(), eqs.end(), [&](std::size_t a, std::size_t b) {
      return boolsys::indicator_cost(sys.equations[a]) > boolsys::indicator_cost(sys.equations[b]);
    });
  }
  LeafAssignment out{strategy, {}};
  for (std::size_t i = 0; i < leaves.size(); ++i) out.equation_of[leaves[i]] = eqs[i];
  return out;
}

/// Per-leaf indicator gate counts, for CostModel::leaf_delta.
inline std::map<NodeId, Cost> leaf_deltas(const boolsys::BooleanSystem& sys, const LeafAssignment& a) {
  std::map<NodeId, Cost> out;
  for (const auto& [leaf, eq] : a.equation_of) out[leaf] = static_cast<Cost>(boolsys::indicator_cost(sys.equations[eq]));
  return out;
}

}  // namespace hrse::synth
