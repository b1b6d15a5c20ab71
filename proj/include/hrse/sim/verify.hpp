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
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hrse/boolsys/anf.hpp"
#include "hrse/sim/basis.hpp"
#include "hrse/sim/statevector.hpp"
#include "hrse/synth/layout.hpp"

namespace hrse::sim {

struct Coverage {
  bool full = true;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  static Coverage exhaustive() { return {true, 0, 0}; }
  static Coverage sample(std::size_t count, std::uint64_t seed) { return {false, count, seed}; }
};

inline constexpr std::size_t kMaxFullCoverageVariables = 12;

enum class Check { Output, AuxRestored, InputPreserved };

inline const char* to_string(Check c) {
  switch (c) {
    case Check::Output: return "output";
    case Check::AuxRestored: return "aux_restored";
    case Check::InputPreserved: return "input_preserved";
  }
  return "?";
}

struct Counterexample {
  boolsys::Assignment input = 0;
  Check check = Check::Output;
  BasisState result;
};

struct VerificationReport {
  synth::Mode mode = synth::Mode::Phase;
  std::size_t inputs_checked = 0;
  /// Inputs the oracle marked (phase -1 or output 1).
  std::size_t marked = 0;
  std::size_t failures = 0;
  /// The first few failures, in input order.
  std::vector<Counterexample> counterexamples;

  bool ok() const { return failures == 0; }

  std::string to_text() const {
    std::ostringstream os;
    os << "mode=" << to_string(mode) << " inputs=" << inputs_checked << " marked=" << marked
       << " failures=" << failures << " verdict=" << (ok() ? "verified" : "FAILED") << "\n";
    for (const auto& c : counterexamples) {
      os << "counterexample input=" << c.input << " check=" << to_string(c.check) << " bits=" << c.result.bits
         << " phase=" << c.result.phase << "\n";
    }
    return os.str();
  }

  std::string to_csv() const {
    std::ostringstream os;
    os << "input,check,bits,phase\n";
    for (const auto& c : counterexamples) {
      os << c.input << ',' << to_string(c.check) << ',' << c.result.bits << ',' << c.result.phase << "\n";
    }
    return os.str();
  }
};

/**
 * Runs the oracle on |x>|0...0> and checks the mark (phase or output bit)
 * against the system, that every auxiliary qubit returns to 0, and that the
 * inputs are unchanged. Inputs are qubits 0..n-1; in xor mode the output is
 * the last qubit. Circuits with H gates are simulated on the statevector
 * (at most 22 qubits); an input that does not land on one basis state fails
 * the output check with phase 0.
 */
inline VerificationReport verify_oracle(const circuit::Circuit& c, const boolsys::BooleanSystem& sys, synth::Mode mode,
                                        const Coverage& coverage = Coverage::exhaustive(),
                                        std::size_t max_counterexamples = 16) {
  const std::size_t n = sys.n;
  const std::size_t width = c.width();
  if (width < n + (mode == synth::Mode::Xor ? 1 : 0)) throw InvalidArgument("circuit narrower than its inputs");
  if (coverage.full && n > kMaxFullCoverageVariables) {
    throw InvalidArgument("full coverage is limited to " + std::to_string(kMaxFullCoverageVariables) + " variables");
  }
  // Lowered phase oracles contain H; those run on the statevector and must
  // still map each basis input to a single signed basis state.
  const bool has_h = circuit::gate_count(c, {circuit::GateKind::H}) > 0;
  std::optional<BasisProgram> prog;
  if (!has_h) prog.emplace(c);
  auto run = [&](boolsys::Assignment x) -> std::optional<BasisState> {
    if (prog) return prog->run({x, 1});
    const auto sv = apply_statevector(c, StateVector(width, x));
    for (std::size_t i = 0; i < sv.dimension(); ++i) {
      const auto a = sv[i];
      if (std::norm(a) < 0.5) continue;
      if (std::abs(std::abs(a.real()) - 1.0) > 1e-9 || std::abs(a.imag()) > 1e-9) return std::nullopt;
      return BasisState{i, a.real() > 0 ? 1 : -1};
    }
    return std::nullopt;
  };
  const std::uint64_t input_mask = (std::uint64_t{1} << n) - 1;
  const std::uint64_t out_bit = mode == synth::Mode::Xor ? std::uint64_t{1} << (width - 1) : 0;
  const std::uint64_t aux_mask = (width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1) & ~input_mask & ~out_bit;

  VerificationReport r;
  r.mode = mode;
  auto fail = [&](boolsys::Assignment x, Check k, const BasisState& s) {
    ++r.failures;
    if (r.counterexamples.size() < max_counterexamples) r.counterexamples.push_back({x, k, s});
  };
  auto check_one = [&](boolsys::Assignment x) {
    const bool want = sys.satisfied_by(x);
    ++r.inputs_checked;
    const auto result = run(x);
    if (!result) {
      fail(x, Check::Output, BasisState{0, 0});
      return;
    }
    const BasisState s = *result;
    bool marked;
    if (mode == synth::Mode::Phase) {
      marked = s.phase == -1;
    } else {
      marked = (s.bits & out_bit) != 0;
      if (s.phase != 1) fail(x, Check::Output, s);
    }
    if (marked) ++r.marked;
    if (marked != want) fail(x, Check::Output, s);
    if (s.bits & aux_mask) fail(x, Check::AuxRestored, s);
    if ((s.bits & input_mask) != x) fail(x, Check::InputPreserved, s);
  };
  if (coverage.full) {
    for (boolsys::Assignment x = 0; x <= input_mask; ++x) check_one(x);
  } else {
    std::mt19937_64 rng(coverage.seed);
    for (std::size_t i = 0; i < coverage.samples; ++i) check_one(rng() & input_mask);
  }
  return r;
}

}  // namespace hrse::sim
