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
#include <span>
#include <vector>

#include "hrse/boolsys/anf.hpp"
#include "hrse/circuit/circuit.hpp"

namespace hrse::boolsys {

class QubitCollision : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/**
 * target ^= [p(x) = 0], assuming target starts at |0>. One X-type gate per
 * monomial (controls = its variables), then a final X. Inputs are untouched.
 */
inline void append_indicator(circuit::Circuit& out, const AnfPoly& p, std::span<const circuit::Qubit> var_qubits,
                             circuit::Qubit target) {
  if (std::find(var_qubits.begin(), var_qubits.end(), target) != var_qubits.end()) {
    throw QubitCollision("indicator target q[" + std::to_string(target) + "] is also a variable qubit");
  }
  for (const auto& m : p.terms()) {
    std::vector<circuit::Qubit> controls;
    for (auto i : m.variables()) {
      if (i >= var_qubits.size()) throw InvalidArgument("monomial uses x" + std::to_string(i + 1) + " without a qubit");
      controls.push_back(var_qubits[i]);
    }
    out.add(circuit::Gate::controlled_x(std::move(controls), target));
  }
  out.add(circuit::Gate::x(target));
}

inline circuit::Circuit encode_indicator(const AnfPoly& p, std::span<const circuit::Qubit> var_qubits,
                                         circuit::Qubit target, std::size_t width = 0) {
  std::size_t w = target + 1;
  for (auto q : var_qubits) w = std::max<std::size_t>(w, q + 1);
  circuit::Circuit c(std::max(w, width));
  append_indicator(c, p, var_qubits, target);
  return c;
}

/// Gate count of the indicator circuit: one per monomial plus the final X.
inline std::size_t indicator_cost(const AnfPoly& p) { return p.terms().size() + 1; }

}  // namespace hrse::boolsys
