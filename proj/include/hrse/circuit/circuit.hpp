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
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hrse/core/error.hpp"

namespace hrse::circuit {

using Qubit = std::uint32_t;

enum class GateKind { X, H, Z, CX, CCX, MCX, MCZ };

inline const char* to_string(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "x";
    case GateKind::H: return "h";
    case GateKind::Z: return "z";
    case GateKind::CX: return "cx";
    case GateKind::CCX: return "ccx";
    case GateKind::MCX: return "mcx";
    case GateKind::MCZ: return "mcz";
  }
  return "?";
}

class InvalidGate : public Error {
 public:
  using Error::Error;
};

/**
 * A gate with ordered controls and one target. MCZ is symmetric in its
 * operands; its last operand is stored as the target.
 */
struct Gate {
  GateKind kind = GateKind::X;
  std::vector<Qubit> controls;
  Qubit target = 0;

  static Gate x(Qubit q) { return {GateKind::X, {}, q}; }
  static Gate h(Qubit q) { return {GateKind::H, {}, q}; }
  static Gate z(Qubit q) { return {GateKind::Z, {}, q}; }
  static Gate cx(Qubit c, Qubit t) { return {GateKind::CX, {c}, t}; }
  static Gate ccx(Qubit a, Qubit b, Qubit t) { return {GateKind::CCX, {a, b}, t}; }
  static Gate mcx(std::vector<Qubit> controls, Qubit t) { return {GateKind::MCX, std::move(controls), t}; }
  static Gate mcz(std::vector<Qubit> controls, Qubit t) { return {GateKind::MCZ, std::move(controls), t}; }

  /// X-type gate with the narrowest kind for the control count.
  static Gate controlled_x(std::vector<Qubit> controls, Qubit t) {
    switch (controls.size()) {
      case 0: return x(t);
      case 1: return cx(controls[0], t);
      case 2: return ccx(controls[0], controls[1], t);
      default: return mcx(std::move(controls), t);
    }
  }

  std::vector<Qubit> operands() const {
    std::vector<Qubit> out = controls;
    out.push_back(target);
    return out;
  }

  bool touches(Qubit q) const {
    return target == q || std::find(controls.begin(), controls.end(), q) != controls.end();
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

/** Throws InvalidGate unless `g` is well formed on `width` qubits. */
inline void check_gate(const Gate& g, std::size_t width) {
  std::size_t want_min = 0, want_max = 0;
  switch (g.kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::Z: want_min = want_max = 0; break;
    case GateKind::CX: want_min = want_max = 1; break;
    case GateKind::CCX: want_min = want_max = 2; break;
    case GateKind::MCX:
    case GateKind::MCZ:
      want_min = 1;
      want_max = SIZE_MAX;
      break;
  }
  if (g.controls.size() < want_min || g.controls.size() > want_max) {
    throw InvalidGate(
        std::string(to_string(g.kind)) + " with " + std::to_string(g.controls.size()) + " controls");
  }
  auto ops = g.operands();
  for (Qubit q : ops) {
    if (q >= width) {
      throw InvalidGate(
          std::string(to_string(g.kind)) + " operand q[" + std::to_string(q) +
          "] outside width " + std::to_string(width));
    }
  }
  std::sort(ops.begin(), ops.end());
  if (std::adjacent_find(ops.begin(), ops.end()) != ops.end()) {
    throw InvalidGate(std::string(to_string(g.kind)) + " has repeated operands");
  }
}

class Circuit {
 public:
  explicit Circuit(std::size_t width = 0) : width_(width) {}

  std::size_t width() const { return width_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  Circuit& add(Gate g) {
    check_gate(g, width_);
    gates_.push_back(std::move(g));
    return *this;
  }
  Circuit& append(const Circuit& other) {
    if (other.width_ > width_) throw InvalidGate("appending a wider circuit");
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
  }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t width_;
  std::vector<Gate> gates_;
};

/**
 * Layer count under as-soon-as-possible scheduling: a gate occupies all of
 * its operands for one layer and starts after every earlier gate sharing an
 * operand.
 */
inline std::size_t depth(const Circuit& c) {
  std::vector<std::size_t> busy_until(c.width(), 0);
  std::size_t total = 0;
  for (const auto& g : c.gates()) {
    std::size_t layer = busy_until[g.target];
    for (Qubit q : g.controls) layer = std::max(layer, busy_until[q]);
    ++layer;
    busy_until[g.target] = layer;
    for (Qubit q : g.controls) busy_until[q] = layer;
    total = std::max(total, layer);
  }
  return total;
}

inline std::size_t gate_count(const Circuit& c, const std::optional<std::set<GateKind>>& filter = std::nullopt) {
  if (!filter) return c.size();
  return static_cast<std::size_t>(std::count_if(
      c.gates().begin(), c.gates().end(), [&](const Gate& g) { return filter->count(g.kind) > 0; }));
}

inline std::size_t gate_count(const Circuit& c, std::initializer_list<GateKind> kinds) {
  return gate_count(c, std::set<GateKind>(kinds));
}

/** Every supported gate is self-inverse, so inversion reverses the list. */
inline Circuit inverse(const Circuit& c) {
  Circuit out(c.width());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) out.add(*it);
  return out;
}

inline Circuit concat(const Circuit& a, const Circuit& b) {
  Circuit out(std::max(a.width(), b.width()));
  out.append(a);
  out.append(b);
  return out;
}

/** Peephole pass: drops adjacent identical gates, cascading. */
inline Circuit cancel_adjacent_pairs(const Circuit& c) {
  std::vector<Gate> kept;
  for (const auto& g : c.gates()) {
    if (!kept.empty() && kept.back() == g) {
      kept.pop_back();
    } else {
      kept.push_back(g);
    }
  }
  Circuit out(c.width());
  for (auto& g : kept) out.add(std::move(g));
  return out;
}

}  // namespace hrse::circuit
