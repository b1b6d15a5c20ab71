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
#include <vector>

#include "hrse/circuit/decompose.hpp"
#include "hrse/synth/layout.hpp"

namespace hrse::synth {

struct SynthResult {
  circuit::Circuit circuit;
  /// Clean qubits at each MCX/MCZ, ready for circuit::decompose.
  circuit::DecompositionPlan plan;
};

namespace detail {

struct Step {
  circuit::Gate gate;
  std::vector<Qubit> clean;
};

using Block = std::vector<Step>;

class Lowering {
 public:
  Lowering(const HrseTree& tree, const boolsys::BooleanSystem& sys, const QubitLayout& layout,
           const LeafAssignment& assignment)
      : tree_(tree), sys_(sys), L_(layout), a_(assignment), inputs_(layout.inputs()) {}

  Block root() {
    const NodeId r = tree_.root();
    const auto& slot = L_.slots[r];
    Block out;
    if (tree_.is_leaf(r)) {
      if (L_.mode == Mode::Xor) return indicator(r, *L_.output(), L_.block(0, L_.k));
      Block body = indicator(r, *slot.result, L_.block(0, L_.k - 1));
      out = body;
      out.push_back({circuit::Gate::z(*slot.result), {}});
      append_inverse(out, body);
      return out;
    }
    auto [computes, results] = compute_children(r, out);
    std::vector<Qubit> free = free_qubits(r, results);
    if (L_.mode == Mode::Xor) {
      out.push_back({circuit::Gate::controlled_x(results, *L_.output()), free});
    } else if (results.size() == 1) {
      out.push_back({circuit::Gate::z(results[0]), free});
    } else {
      const Qubit last = results.back();
      results.pop_back();
      out.push_back({circuit::Gate::mcz(results, last), free});
    }
    uncompute_children(out, computes);
    return out;
  }

 private:
  Block node(NodeId v) {
    const auto& slot = L_.slots[v];
    if (tree_.is_leaf(v)) return indicator(v, *slot.result, L_.block(slot.base, slot.size - 1));
    Block out;
    auto [computes, results] = compute_children(v, out);
    std::vector<Qubit> free = free_qubits(v, results);
    out.push_back({circuit::Gate::controlled_x(results, *slot.result), free});
    uncompute_children(out, computes);
    return out;
  }

  std::pair<std::vector<Block>, std::vector<Qubit>> compute_children(NodeId v, Block& out) {
    std::vector<NodeId> kids(tree_.children(v).begin(), tree_.children(v).end());
    std::stable_sort(kids.begin(), kids.end(), [&](NodeId a, NodeId b) { return tree_.size(a) > tree_.size(b); });
    std::vector<Block> computes;
    std::vector<Qubit> results;
    for (NodeId c : kids) {
      computes.push_back(node(c));
      out.insert(out.end(), computes.back().begin(), computes.back().end());
      results.push_back(*L_.slots[c].result);
    }
    return {std::move(computes), std::move(results)};
  }

  // A later sibling's block lies under an earlier sibling's result, so the
  // children must be undone last-computed first.
  static void uncompute_children(Block& out, const std::vector<Block>& computes) {
    for (auto it = computes.rbegin(); it != computes.rend(); ++it) append_inverse(out, *it);
  }

  static void append_inverse(Block& out, const Block& b) { out.insert(out.end(), b.rbegin(), b.rend()); }

  std::vector<Qubit> free_qubits(NodeId v, const std::vector<Qubit>& live) const {
    const auto& slot = L_.slots[v];
    std::vector<Qubit> out;
    for (Qubit q : L_.block(slot.base, slot.size)) {
      if (slot.result && q == *slot.result) continue;
      if (std::find(live.begin(), live.end(), q) == live.end()) out.push_back(q);
    }
    return out;
  }

  Block indicator(NodeId leaf, Qubit target, std::vector<Qubit> clean) const {
    const auto it = a_.equation_of.find(leaf);
    if (it == a_.equation_of.end()) throw InvalidArgument("leaf " + std::to_string(leaf) + " has no equation");
    circuit::Circuit c(L_.width());
    boolsys::append_indicator(c, sys_.equations.at(it->second), inputs_, target);
    clean.erase(std::remove(clean.begin(), clean.end(), target), clean.end());
    Block out;
    for (const auto& g : c.gates()) out.push_back({g, clean});
    return out;
  }

  const HrseTree& tree_;
  const boolsys::BooleanSystem& sys_;
  const QubitLayout& L_;
  const LeafAssignment& a_;
  std::vector<Qubit> inputs_;
};

}  // namespace detail

/**
 * Lowers the tree to an oracle. Each non-leaf computes its children in
 * decreasing size, merges their results with one MCX, then uncomputes them.
 * The root merges onto the output qubit (xor) or applies MCZ over the child
 * results (phase).
 */
inline SynthResult synthesize(const HrseTree& tree, const boolsys::BooleanSystem& sys, const QubitLayout& layout,
                              const LeafAssignment& assignment) {
  if (layout.n != sys.n) throw InvalidArgument("layout and system disagree on the variable count");
  if (layout.slots.size() != tree.node_count()) throw InvalidArgument("layout was built for another tree");
  detail::Lowering lowering(tree, sys, layout, assignment);
  const auto steps = lowering.root();
  SynthResult out{circuit::Circuit(layout.width()), {}};
  for (const auto& st : steps) {
    if (st.gate.kind == circuit::GateKind::MCX || st.gate.kind == circuit::GateKind::MCZ) {
      out.plan.clean_ancillas[out.circuit.size()] = st.clean;
    }
    out.circuit.add(st.gate);
  }
  return out;
}

inline SynthResult synthesize(const HrseTree& tree, const boolsys::BooleanSystem& sys, std::size_t k, Mode mode,
                              LeafStrategy strategy = LeafStrategy::ByIndex) {
  const auto layout = allocate(tree, sys.n, k, mode);
  return synthesize(tree, sys, layout, assign_leaves(tree, sys, strategy));
}

/** H, X on every input, MCZ over all inputs, then X and H again. */
inline circuit::Circuit grover_diffuser(std::size_t n, std::size_t width = 0) {
  if (n < 1) throw InvalidArgument("diffuser needs at least one qubit");
  circuit::Circuit c(std::max(n, width));
  for (Qubit q = 0; q < n; ++q) c.add(circuit::Gate::h(q));
  for (Qubit q = 0; q < n; ++q) c.add(circuit::Gate::x(q));
  if (n == 1) {
    c.add(circuit::Gate::z(0));
  } else {
    std::vector<Qubit> controls;
    for (Qubit q = 0; q + 1 < n; ++q) controls.push_back(q);
    c.add(circuit::Gate::mcz(controls, static_cast<Qubit>(n - 1)));
  }
  for (Qubit q = 0; q < n; ++q) c.add(circuit::Gate::x(q));
  for (Qubit q = 0; q < n; ++q) c.add(circuit::Gate::h(q));
  return c;
}

}  // namespace hrse::synth
