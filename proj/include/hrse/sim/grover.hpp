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

#include "hrse/sim/statevector.hpp"
#include "hrse/synth/oracle.hpp"

namespace hrse::sim {

/// sin^2((2R+1) theta) with sin(theta) = sqrt(M / 2^n).
inline double grover_success_formula(std::size_t n, std::size_t solutions, std::size_t iterations) {
  const double theta = std::asin(std::sqrt(static_cast<double>(solutions) / std::ldexp(1.0, static_cast<int>(n))));
  const double s = std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta);
  return s * s;
}

/**
 * Prepares the uniform superposition on the inputs, applies
 * (diffuser * phase oracle)^iterations and returns the probability of
 * measuring a solution of the system.
 */
inline double grover_run(const boolsys::BooleanSystem& sys, const HrseTree& tree, std::size_t k,
                         std::size_t iterations) {
  const auto oracle = synth::synthesize(tree, sys, k, synth::Mode::Phase).circuit;
  const std::size_t width = oracle.width();
  if (width > kMaxStatevectorWidth) {
    throw WidthTooLarge("grover run needs " + std::to_string(width) + " qubits, limit " +
                        std::to_string(kMaxStatevectorWidth));
  }
  const auto diffuser = synth::grover_diffuser(sys.n, width);
  StateVector s(width);
  for (circuit::Qubit q = 0; q < sys.n; ++q) s.apply(circuit::Gate::h(q));
  for (std::size_t r = 0; r < iterations; ++r) {
    s = apply_statevector(oracle, std::move(s));
    s = apply_statevector(diffuser, std::move(s));
  }
  const std::uint64_t input_mask = (std::uint64_t{1} << sys.n) - 1;
  double p = 0;
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    if (sys.satisfied_by(i & input_mask)) p += std::norm(s[i]);
  }
  return p;
}

}  // namespace hrse::sim
