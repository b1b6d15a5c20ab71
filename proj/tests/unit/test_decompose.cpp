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

#include <catch_amalgamated.hpp>

#include <numeric>

#include "hrse/circuit/decompose.hpp"
#include "hrse/sim/basis.hpp"
#include "oracles.hpp"

using namespace hrse;
using namespace hrse::circuit;

namespace {

std::vector<Qubit> range(Qubit from, Qubit count) {
  std::vector<Qubit> v(count);
  std::iota(v.begin(), v.end(), from);
  return v;
}

bool native_only(const Circuit& c) {
  return gate_count(c, {GateKind::MCX, GateKind::MCZ}) == 0;
}

// Every basis input: target flips iff all controls are set, nothing else moves.
void check_truth_table(const Circuit& lowered, const std::vector<Qubit>& controls, Qubit target,
                       std::uint64_t must_be_zero = 0) {
  const std::uint64_t ctl = std::accumulate(
      controls.begin(), controls.end(), std::uint64_t{0}, [](auto m, Qubit q) { return m | (std::uint64_t{1} << q); });
  const sim::BasisProgram prog(lowered);
  for (std::uint64_t in = 0; in < (std::uint64_t{1} << lowered.width()); ++in) {
    if (in & must_be_zero) continue;
    const auto out = prog.run({in, 1});
    const std::uint64_t want = (in & ctl) == ctl ? in ^ (std::uint64_t{1} << target) : in;
    REQUIRE(out.bits == want);
    REQUIRE(out.phase == 1);
  }
}

}  // namespace

TEST_CASE("three-control MCX through one clean ancilla") {
  Circuit c(5);
  c.add(Gate::mcx({0, 1, 2}, 3));
  DecompositionPlan plan;
  plan.clean_ancillas[0] = {4};
  const auto d = decompose(c, plan);
  const std::vector<Gate> want{Gate::ccx(0, 1, 4), Gate::ccx(2, 4, 3), Gate::ccx(0, 1, 4)};
  CHECK(d.gates() == want);
}

TEST_CASE("two-control MCZ becomes H CCX H") {
  Circuit c(3);
  c.add(Gate::mcz({0, 1}, 2));
  const auto d = decompose(c, {});
  const std::vector<Gate> want{Gate::h(2), Gate::ccx(0, 1, 2), Gate::h(2)};
  CHECK(d.gates() == want);
}

TEST_CASE("vchain truth tables with clean ancillas") {
  for (Qubit nc = 2; nc <= 8; ++nc) {
    const auto controls = range(0, nc);
    const Qubit target = nc;
    const Qubit width = nc + 1 + (nc - 2);
    Circuit c(width);
    c.add(Gate::controlled_x(controls, target));
    DecompositionPlan plan;
    plan.clean_ancillas[0] = range(nc + 1, nc - 2);
    const auto d = decompose(c, plan);
    CHECK(native_only(d));
    std::uint64_t anc = 0;
    for (Qubit q : plan.clean_ancillas[0]) anc |= std::uint64_t{1} << q;
    check_truth_table(d, controls, target, anc);
    if (nc > 2) CHECK(gate_count(d, {GateKind::CCX}) == 2 * (nc - 2) + 1);
  }
}

TEST_CASE("no-ancilla truth tables with the borrowed qubit in either state") {
  for (Qubit nc = 2; nc <= 8; ++nc) {
    const auto controls = range(0, nc);
    Circuit c(nc + 2);
    c.add(Gate::controlled_x(controls, nc));
    DecompositionPlan plan;
    plan.strategy = Strategy::NoAncilla;
    const auto d = decompose(c, plan);
    CHECK(native_only(d));
    check_truth_table(d, controls, nc);
  }
}

TEST_CASE("dirty ladder uses 4(c-2) Toffolis and restores its helpers") {
  for (Qubit nc = 3; nc <= 7; ++nc) {
    const auto controls = range(0, nc);
    Circuit d(2 * nc);
    append_mcx_dirty(d, controls, nc, range(nc + 1, nc - 2));
    CHECK(d.size() == 4 * (nc - 2));
    check_truth_table(d, controls, nc);
  }
}

TEST_CASE("missing ancillas") {
  Circuit c(5);
  c.add(Gate::x(4));
  c.add(Gate::mcx({0, 1, 2, 3}, 4));
  DecompositionPlan plan;
  try {
    decompose(c, plan);
    FAIL("expected InsufficientAncilla");
  } catch (const InsufficientAncilla& e) {
    CHECK(e.gate_index() == 1);
    CHECK(e.needed() == 2);
    CHECK(e.available() == 0);
  }
  // Operands listed as ancillas do not count.
  plan.clean_ancillas[1] = {0, 4};
  CHECK_THROWS_AS(decompose(c, plan), InsufficientAncilla);

  Circuit wide(6);
  wide.add(Gate::mcx({0, 1, 2, 3}, 4));
  plan.fallback_to_no_ancilla = true;
  DecomposeStats stats;
  const auto d = decompose(wide, plan, &stats);
  CHECK(stats.lowered == 1);
  CHECK(stats.fallbacks == 1);
  check_truth_table(d, {0, 1, 2, 3}, 4);

  Circuit full(4);
  full.add(Gate::mcx({0, 1, 2}, 3));
  plan.strategy = Strategy::NoAncilla;
  CHECK_THROWS_AS(decompose(full, plan), InsufficientAncilla);
}

TEST_CASE("lowered MCZ has the same unitary") {
  for (Qubit nc = 1; nc <= 4; ++nc) {
    Circuit c(nc + 2);
    c.add(Gate::mcz(range(0, nc), nc));
    DecompositionPlan plan;
    plan.strategy = Strategy::NoAncilla;
    const auto d = decompose(c, plan);
    CHECK(native_only(d));
    CHECK(oracles::max_abs_diff(oracles::circuit_matrix(d), oracles::circuit_matrix(c)) < 1e-9);
  }
}

TEST_CASE("strategy names") {
  CHECK(parse_strategy("vchain") == Strategy::VChain);
  CHECK(parse_strategy("noancilla") == Strategy::NoAncilla);
  CHECK(parse_strategy("no_ancilla") == Strategy::NoAncilla);
  CHECK(std::string(to_string(Strategy::NoAncilla)) == "noancilla");
  CHECK_THROWS_AS(parse_strategy("magic"), InvalidArgument);
}
