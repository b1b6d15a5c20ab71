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

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "hrse/sim/basis.hpp"

namespace hrse::sim {

inline constexpr std::size_t kMaxStatevectorWidth = 22;

class StateVector {
 public:
  using Amplitude = std::complex<double>;

  /// |index> on `width` qubits.
  explicit StateVector(std::size_t width, std::uint64_t index = 0) : width_(width) {
    if (width > kMaxStatevectorWidth) {
      throw WidthTooLarge("statevector width " + std::to_string(width) + " exceeds " +
                          std::to_string(kMaxStatevectorWidth));
    }
    amps_.assign(std::size_t{1} << width, Amplitude{0.0, 0.0});
    amps_.at(index) = 1.0;
  }

  std::size_t width() const { return width_; }
  std::size_t dimension() const { return amps_.size(); }
  const std::vector<Amplitude>& amplitudes() const { return amps_; }
  std::vector<Amplitude>& amplitudes() { return amps_; }
  Amplitude operator[](std::size_t i) const { return amps_[i]; }

  double norm() const {
    double s = 0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
  }

  void apply(const circuit::Gate& g) {
    std::uint64_t cmask = 0;
    for (auto q : g.controls) cmask |= std::uint64_t{1} << q;
    const std::uint64_t t = std::uint64_t{1} << g.target;
    const std::size_t dim = amps_.size();
    switch (g.kind) {
      case circuit::GateKind::H: {
        const double r = 1.0 / std::sqrt(2.0);
        for (std::size_t i = 0; i < dim; ++i) {
          if (i & t) continue;
          const Amplitude a = amps_[i], b = amps_[i | t];
          amps_[i] = r * (a + b);
          amps_[i | t] = r * (a - b);
        }
        break;
      }
      case circuit::GateKind::Z:
      case circuit::GateKind::MCZ: {
        const std::uint64_t all = cmask | t;
        for (std::size_t i = 0; i < dim; ++i) {
          if ((i & all) == all) amps_[i] = -amps_[i];
        }
        break;
      }
      default:
        for (std::size_t i = 0; i < dim; ++i) {
          if ((i & t) || (i & cmask) != cmask) continue;
          std::swap(amps_[i], amps_[i | t]);
        }
    }
  }

 private:
  std::size_t width_;
  std::vector<Amplitude> amps_;
};

inline StateVector apply_statevector(const circuit::Circuit& c, StateVector s) {
  if (c.width() > s.width()) throw WidthTooLarge("circuit is wider than the state");
  for (const auto& g : c.gates()) s.apply(g);
  return s;
}

}  // namespace hrse::sim
