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

#include "hrse/asdt.hpp"
#include "hrse/core/cost.hpp"
#include "hrse/core/serialize.hpp"
#include "hrse/core/validate.hpp"
#include "oracles.hpp"

using namespace hrse;

TEST_CASE("golden trace for m=7, k=5") {
  const auto r = asdt::build({7, 5, false});
  CHECK(r.trace.to_text() ==
        "split node=0 size=5 depth=0 -> 4 3\n"
        "add node=0 size=5 depth=0 -> 2\n"
        "add node=0 size=5 depth=0 -> 1\n"
        "split node=1 size=4 depth=1 -> 3 2\n"
        "add node=1 size=4 depth=1 -> 1\n"
        "split node=2 size=3 depth=1 -> 2 1\n");
  CHECK(r.tree.node_count() == 10);
  CHECK(r.tree.leaf_count() == 7);
  CHECK(leaf_cost(r.tree) == 24);
  CHECK(asdt::is_saturated_tree(r.tree));
}

TEST_CASE("small builds") {
  SECTION("m=1 is the bare root") {
    const auto r = asdt::build({1, 3, false});
    CHECK(r.tree.node_count() == 1);
    CHECK(r.trace.steps.empty());
  }
  SECTION("m=4, k=4") {
    const auto r = asdt::build({4, 4, false});
    CHECK(leaf_cost(r.tree) == 12);
    CHECK(r.tree.leaf_count() == 4);
  }
  SECTION("root bonus raises the root size") {
    const auto r = asdt::build({5, 4, true});
    CHECK(r.tree.size(r.tree.root()) == 5);
    CHECK(r.tree.leaf_count() == 5);
  }
}

TEST_CASE("capacity") {
  CHECK(asdt::capacity(1, false) == 1);
  CHECK(asdt::capacity(5, false) == 8);
  CHECK(asdt::capacity(6, false) == 16);
  CHECK(asdt::capacity(5, true) == 16);
  for (int k = 1; k <= 24; ++k) {
    CHECK(asdt::capacity(k, false) == oracles::leaves_capacity(k));
    CHECK(asdt::capacity(k, true) == oracles::leaves_capacity(k + 1));
  }
  CHECK(asdt::max_leaves(0) == 0);
  CHECK(asdt::max_leaves(200) == std::numeric_limits<std::uint64_t>::max());
  CHECK_THROWS_AS(asdt::capacity(0, false), InvalidArgument);
}

TEST_CASE("capacity is reached exactly") {
  for (int k = 1; k <= 9; ++k) {
    const int cap = static_cast<int>(asdt::capacity(k, false));
    const auto r = asdt::build({cap, k, false});
    CHECK(static_cast<int>(r.tree.leaf_count()) == cap);
    CHECK(asdt::is_saturated_tree(r.tree));
    try {
      asdt::build({cap + 1, k, false});
      FAIL("expected CapacityExceeded");
    } catch (const asdt::CapacityExceeded& e) {
      CHECK(e.m() == cap + 1);
      CHECK(e.k() == k);
      CHECK(e.capacity() == static_cast<std::uint64_t>(cap));
    }
  }
  CHECK_THROWS_AS(asdt::build({5, 4, false}), asdt::CapacityExceeded);
  CHECK_THROWS_AS(asdt::build({0, 4, false}), InvalidArgument);
  CHECK_THROWS_AS(asdt::build({3, 0, false}), InvalidArgument);
}

TEST_CASE("classification") {
  auto attr = [](int size, int degree) {
    NodeAttr a;
    a.size = size;
    a.out_degree = degree;
    return a;
  };
  CHECK(asdt::classify(attr(2, 0)) == asdt::NodeClass::ForcedLeaf);
  CHECK(asdt::classify(attr(1, 0)) == asdt::NodeClass::ForcedLeaf);
  CHECK(asdt::classify(attr(3, 0)) == asdt::NodeClass::CandidateLeaf);
  CHECK(asdt::classify(attr(3, 2)) == asdt::NodeClass::SaturatedNonLeaf);
  CHECK(asdt::classify(attr(5, 2)) == asdt::NodeClass::UnsaturatedNonLeaf);
  CHECK(asdt::classify(attr(5, 4)) == asdt::NodeClass::SaturatedNonLeaf);
}

TEST_CASE("every build is valid, has m leaves, and never holds two unsaturated nodes") {
  for (int k = 1; k <= 9; ++k) {
    for (bool bonus : {false, true}) {
      const int cap = static_cast<int>(asdt::capacity(k, bonus));
      for (int m = 1; m <= cap; ++m) {
        const auto r = asdt::build({m, k, bonus});
        REQUIRE(validate(r.tree).ok());
        CHECK(static_cast<int>(r.tree.leaf_count()) == m);
        CHECK(r.trace.steps.size() == static_cast<std::size_t>(m - 1));
        int worst = 0;
        const auto replayed = asdt::replay(r.tree.size(0), r.trace, [&](const HrseTree& t) {
          int unsat = 0;
          for (NodeId v = 0; v < t.node_count(); ++v) {
            unsat += asdt::classify(t.attr(v)) == asdt::NodeClass::UnsaturatedNonLeaf;
          }
          worst = std::max(worst, unsat);
        });
        CHECK(worst <= 1);
        CHECK(serialize(replayed) == serialize(r.tree));
      }
    }
  }
}

TEST_CASE("builds are deterministic") {
  const auto a = asdt::build({120, 10, true});
  const auto b = asdt::build({120, 10, true});
  CHECK(a.trace == b.trace);
  CHECK(serialize(a.tree) == serialize(b.tree));
}

TEST_CASE("more qubits never cost more") {
  for (int m = 1; m <= 40; ++m) {
    Cost prev = -1;
    for (int k = 1; k <= 12; ++k) {
      if (static_cast<std::uint64_t>(m) > asdt::capacity(k, false)) continue;
      const Cost c = leaf_cost(asdt::build({m, k, false}).tree);
      if (prev >= 0) CHECK(c <= prev);
      prev = c;
    }
  }
}

TEST_CASE("replay rejects traces that do not fit") {
  asdt::BuildTrace bad;
  bad.steps.push_back({3, 5, 0, asdt::Action::SplitLeaf, {4, 3}});
  CHECK_THROWS_AS(asdt::replay(5, bad), InvalidArgument);
  asdt::BuildTrace wrong_action;
  wrong_action.steps.push_back({0, 5, 0, asdt::Action::AddChild, {4}});
  CHECK_THROWS_AS(asdt::replay(5, wrong_action), InvalidArgument);
}
