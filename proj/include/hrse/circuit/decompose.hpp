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
#include <span>
#include <string>
#include <vector>

#include "hrse/circuit/circuit.hpp"

namespace hrse::circuit {

enum class Strategy {
  /// CCX ladder through controls-2 clean ancillas.
  VChain,
  /// No clean ancilla: borrows one idle qubit in any state and restores it.
  NoAncilla,
};

inline const char* to_string(Strategy s) { return s == Strategy::VChain ? "vchain" : "noancilla"; }

inline Strategy parse_strategy(const std::string& s) {
  if (s == "vchain") return Strategy::VChain;
  if (s == "noancilla" || s == "no_ancilla" || s == "no-ancilla") return Strategy::NoAncilla;
  throw InvalidArgument("unknown decomposition strategy '" + s + "'");
}

struct DecompositionPlan {
  Strategy strategy = Strategy::VChain;
  /// Qubits guaranteed |0> at a given gate index.
  std::map<std::size_t, std::vector<Qubit>> clean_ancillas;
  /// Lower a gate with the no-ancilla scheme instead of failing when vchain
  /// lacks clean ancillas.
  bool fallback_to_no_ancilla = false;
};

struct DecomposeStats {
  std::size_t lowered = 0;    // MCX/MCZ gates rewritten
  std::size_t fallbacks = 0;  // vchain gates lowered without ancillas
};

class InsufficientAncilla : public Error {
 public:
  InsufficientAncilla(std::size_t gate_index, std::size_t needed, std::size_t available)
      : Error(
            "gate " + std::to_string(gate_index) + " needs " + std::to_string(needed) +
            " ancillas, " + std::to_string(available) + " available"),
        gate_index_(gate_index),
        needed_(needed),
        available_(available) {}
  std::size_t gate_index() const { return gate_index_; }
  std::size_t needed() const { return needed_; }
  std::size_t available() const { return available_; }

 private:
  std::size_t gate_index_, needed_, available_;
};

/**
 * target ^= AND(controls) using controls-2 clean ancillas: compute the
 * partial products up the ladder, hit the target, then undo the ladder.
 */
inline void append_mcx_vchain(Circuit& out, std::span<const Qubit> controls, Qubit target,
                              std::span<const Qubit> clean) {
  const std::size_t c = controls.size();
  if (c <= 2) {
    out.add(Gate::controlled_x({controls.begin(), controls.end()}, target));
    return;
  }
  if (clean.size() < c - 2) throw InsufficientAncilla(0, c - 2, clean.size());
  std::vector<Gate> ladder;
  ladder.push_back(Gate::ccx(controls[0], controls[1], clean[0]));
  for (std::size_t i = 2; i + 1 < c; ++i) ladder.push_back(Gate::ccx(controls[i], clean[i - 2], clean[i - 1]));
  for (const auto& g : ladder) out.add(g);
  out.add(Gate::ccx(controls[c - 1], clean[c - 3], target));
  for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) out.add(*it);
}

/**
 * target ^= AND(controls) using controls-2 borrowed qubits whose state is
 * arbitrary and is restored. 4(c-2) CCX gates.
 */
inline void append_mcx_dirty(Circuit& out, std::span<const Qubit> controls, Qubit target,
                             std::span<const Qubit> dirty) {
  const std::size_t c = controls.size();
  if (c <= 2) {
    out.add(Gate::controlled_x({controls.begin(), controls.end()}, target));
    return;
  }
  if (dirty.size() < c - 2) throw InsufficientAncilla(0, c - 2, dirty.size());
  auto down = [&] {
    for (std::size_t i = c - 2; i >= 2; --i) out.add(Gate::ccx(controls[i], dirty[i - 2], dirty[i - 1]));
  };
  auto up = [&] {
    for (std::size_t i = 2; i + 1 < c; ++i) out.add(Gate::ccx(controls[i], dirty[i - 2], dirty[i - 1]));
  };
  for (int pass = 0; pass < 2; ++pass) {
    out.add(Gate::ccx(controls[c - 1], dirty[c - 3], target));
    down();
    out.add(Gate::ccx(controls[0], controls[1], dirty[0]));
    up();
  }
}

/**
 * target ^= AND(controls) with a single borrowed qubit: split the controls
 * in halves A and B, then
 *   borrowed ^= AND(A); target ^= AND(B, borrowed); repeat both,
 * where each half borrows the other half's qubits as dirty ancillas.
 */
inline void append_mcx_borrowed(Circuit& out, std::span<const Qubit> controls, Qubit target,
                                Qubit borrowed) {
  const std::size_t c = controls.size();
  if (c <= 2) {
    out.add(Gate::controlled_x({controls.begin(), controls.end()}, target));
    return;
  }
  const std::size_t half = (c + 1) / 2;
  std::vector<Qubit> first(controls.begin(), controls.begin() + half);
  std::vector<Qubit> second(controls.begin() + half, controls.end());
  std::vector<Qubit> second_plus = second;
  second_plus.push_back(borrowed);
  std::vector<Qubit> dirty_for_first = second;
  dirty_for_first.push_back(target);
  for (int pass = 0; pass < 2; ++pass) {
    append_mcx_dirty(out, first, borrowed, dirty_for_first);
    append_mcx_dirty(out, second_plus, target, first);
  }
}

namespace detail {

inline void lower_mcx(Circuit& out, std::size_t index, const std::vector<Qubit>& controls, Qubit target,
                      const DecompositionPlan& plan, DecomposeStats& stats) {
  const std::size_t c = controls.size();
  if (c <= 2) {
    out.add(Gate::controlled_x(controls, target));
    return;
  }
  std::vector<Qubit> clean;
  if (auto it = plan.clean_ancillas.find(index); it != plan.clean_ancillas.end()) {
    for (Qubit q : it->second) {
      const bool operand = q == target || std::find(controls.begin(), controls.end(), q) != controls.end();
      if (!operand) clean.push_back(q);
    }
  }
  bool use_vchain = plan.strategy == Strategy::VChain;
  if (use_vchain && clean.size() < c - 2) {
    if (!plan.fallback_to_no_ancilla) throw InsufficientAncilla(index, c - 2, clean.size());
    use_vchain = false;
    ++stats.fallbacks;
  }
  if (use_vchain) {
    append_mcx_vchain(out, controls, target, clean);
    return;
  }
  // A vchain fallback borrows a clean ancilla when one exists. The plain
  // no-ancilla strategy always takes the lowest idle qubit, so its output
  // does not depend on how much workspace happens to be free.
  std::optional<Qubit> borrowed;
  if (plan.strategy == Strategy::VChain && !clean.empty()) {
    borrowed = clean.front();
  } else {
    for (Qubit q = 0; q < out.width(); ++q) {
      if (q != target && std::find(controls.begin(), controls.end(), q) == controls.end()) {
        borrowed = q;
        break;
      }
    }
  }
  if (!borrowed) throw InsufficientAncilla(index, 1, 0);
  append_mcx_borrowed(out, controls, target, *borrowed);
}

}  // namespace detail

/**
 * Lowers MCX and MCZ to {X, H, Z, CX, CCX}. MCZ becomes H(t) MCX H(t); MCX
 * with one or two controls becomes CX or CCX; wider MCX use the plan's
 * strategy. Ancillas are returned in their original state.
 */
inline Circuit decompose(const Circuit& c, const DecompositionPlan& plan, DecomposeStats* stats = nullptr) {
  DecomposeStats local;
  DecomposeStats& st = stats ? *stats : local;
  Circuit out(c.width());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c.gates()[i];
    switch (g.kind) {
      case GateKind::MCX:
        ++st.lowered;
        detail::lower_mcx(out, i, g.controls, g.target, plan, st);
        break;
      case GateKind::MCZ:
        ++st.lowered;
        out.add(Gate::h(g.target));
        detail::lower_mcx(out, i, g.controls, g.target, plan, st);
        out.add(Gate::h(g.target));
        break;
      default:
        out.add(g);
    }
  }
  return out;
}

}  // namespace hrse::circuit
