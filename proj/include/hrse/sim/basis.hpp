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
#include <vector>

#include "hrse/circuit/circuit.hpp"

namespace hrse::sim {

class UnsupportedGate : public Error {
 public:
  using Error::Error;
};

class WidthTooLarge : public Error {
 public:
  using Error::Error;
};

/** Computational basis state with a real sign. Bit q is qubit q. */
struct BasisState {
  std::uint64_t bits = 0;
  int phase = 1;

  friend bool operator==(const BasisState&, const BasisState&) = default;
};

/**
 * A circuit flattened to masks for repeated basis simulation. Only gates
 * that permute basis states up to sign are accepted.
 */
class BasisProgram {
 public:
  explicit BasisProgram(const circuit::Circuit& c) : width_(c.width()) {
    if (c.width() > 64) throw WidthTooLarge("basis simulation supports at most 64 qubits");
    ops_.reserve(c.size());
    for (const auto& g : c.gates()) {
      if (g.kind == circuit::GateKind::H) {
        throw UnsupportedGate("H is not a basis permutation; use the statevector simulator");
      }
      Op op;
      op.flip = g.kind != circuit::GateKind::Z && g.kind != circuit::GateKind::MCZ;
      for (auto q : g.controls) op.controls |= std::uint64_t{1} << q;
      op.target = std::uint64_t{1} << g.target;
      // Z-type gates fire when every operand is 1.
      if (!op.flip) op.controls |= op.target;
      ops_.push_back(op);
    }
  }

  std::size_t width() const { return width_; }

  BasisState run(BasisState s) const {
    for (const auto& op : ops_) {
      if ((s.bits & op.controls) != op.controls) continue;
      if (op.flip) s.bits ^= op.target;
      else s.phase = -s.phase;
    }
    return s;
  }

 private:
  struct Op {
    std::uint64_t controls = 0;
    std::uint64_t target = 0;
    bool flip = true;
  };
  std::size_t width_;
  std::vector<Op> ops_;
};

/** Applies an H-free circuit to a basis state. */
inline BasisState apply_basis(const circuit::Circuit& c, BasisState s) { return BasisProgram(c).run(s); }

}  // namespace hrse::sim
