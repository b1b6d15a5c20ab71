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

#include "hrse/bench/bench.hpp"

using namespace hrse;
using namespace hrse::bench;

namespace {

BenchConfig small_config(std::size_t threads) {
  BenchConfig cfg;
  cfg.ns = {9};
  cfg.ks = {{9, {3, 4}}};
  cfg.instances = 3;
  cfg.threads = threads;
  return cfg;
}

}  // namespace

TEST_CASE("equations per iteration") {
  CHECK(eqs_per_iteration_default(15) == 5);
  CHECK(eqs_per_iteration_default(20) == 7);
  CHECK(eqs_per_iteration_default(25) == 9);
  BenchConfig cfg;
  cfg.eqs_per_iteration[15] = 4;
  CHECK(eqs_for(cfg, 15) == 4);
  CHECK(eqs_for(cfg, 20) == 7);
}

TEST_CASE("instance seeds are stable and distinct") {
  CHECK(instance_seed(1, 15, 0) == instance_seed(1, 15, 0));
  CHECK(instance_seed(1, 15, 0) != instance_seed(1, 15, 1));
  CHECK(instance_seed(1, 15, 0) != instance_seed(1, 16, 0));
  CHECK(instance_seed(1, 15, 0) != instance_seed(2, 15, 0));
}

TEST_CASE("comparison is deterministic and thread-count independent") {
  const auto a = to_csv(compare(small_config(1)));
  const auto b = to_csv(compare(small_config(2)));
  CHECK(a == b);
  CHECK(a.rfind(std::string(kCompareHeader) + "\n", 0) == 0);
}

TEST_CASE("comparison rows") {
  const auto rows = compare(small_config(1));
  REQUIRE(rows.size() == 2 * 2 * 3);
  std::map<std::size_t, double> asdt_depth;
  for (const auto& r : rows) {
    CHECK(r.eqs == 2);
    if (r.method == Method::Asdt) {
      REQUIRE(r.feasible);
      CHECK(r.instance_depths.size() == 3);
      if (asdt_depth.count(r.k)) CHECK(asdt_depth[r.k] == r.q_depth_mean);
      asdt_depth[r.k] = r.q_depth_mean;
    } else if (r.feasible) {
      CHECK(*r.opt_ratio == 0.0);
    }
  }
  for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
    const auto& w = rows[i];
    const auto& a = rows[i + 1];
    if (!w.feasible) {
      CHECK_FALSE(a.opt_ratio.has_value());
      continue;
    }
    CHECK(a.q_depth_mean <= w.q_depth_mean);
    CHECK(*a.opt_ratio >= 0.0);
    CHECK(a.leaf_cost <= w.leaf_cost);
  }
}

TEST_CASE("csv cells") {
  BenchRow w;
  w.n = 15;
  w.k = 4;
  w.level = 2;
  w.method = Method::Wcycle;
  w.feasible = true;
  w.instances = 15;
  w.q_depth_mean = 540.6;
  w.opt_ratio = 0.0;
  BenchRow a = w;
  a.method = Method::Asdt;
  a.q_depth_mean = 396.6;
  a.opt_ratio = (w.q_depth_mean - a.q_depth_mean) / w.q_depth_mean;
  BenchRow missing = w;
  missing.feasible = false;
  const auto csv = to_csv({w, a, missing});
  CHECK(csv.find("15,4,2,wcycle,15,540.6,") != std::string::npos);
  CHECK(csv.find(",0.00%,") != std::string::npos);
  CHECK(csv.find("15,4,2,asdt,15,396.6,") != std::string::npos);
  CHECK(csv.find(",26.64%,") != std::string::npos);
  CHECK(csv.find("15,4,2,wcycle,15,--,--,--,--,--,--,--,--,--,--\n") != std::string::npos);
}

TEST_CASE("sweep helpers") {
  SweepResult s;
  auto row = [](std::size_t k, double mean, std::vector<std::size_t> depths) {
    SweepRow r;
    r.n = 9;
    r.k = k;
    r.q_depth_mean = mean;
    r.instance_depths = std::move(depths);
    return r;
  };
  s.rows = {row(5, 30, {31, 29}), row(6, 27, {24, 30}), row(7, 20, {20, 20}), row(8, 20, {20, 20})};
  CHECK(s.monotone(9));
  CHECK(s.plateau(9) == std::size_t{7});
  const auto inc = s.instance_increases(9);
  REQUIRE(inc.size() == 1);
  CHECK(inc[0] == std::pair<std::size_t, std::size_t>{1, 6});
  s.rows.push_back(row(9, 21, {21, 21}));
  CHECK_FALSE(s.monotone(9));
  CHECK_FALSE(s.plateau(9).has_value());
  CHECK(s.to_gnuplot().rfind("# n=9\n5 30.0\n", 0) == 0);
}

TEST_CASE("small sweep") {
  SweepConfig cfg;
  cfg.ns = {9};
  cfg.ks = {5, 6, 7, 8, 9};
  cfg.instances = 2;
  const auto r = sweep(cfg);
  REQUIRE(r.rows.size() == 5);
  CHECK(r.rows.back().flat);
  CHECK(r.rows.front().leaf_cost >= r.rows.back().leaf_cost);
  CHECK(r.to_csv() == sweep(cfg).to_csv());
  cfg.ks = {3};
  CHECK_THROWS_AS(sweep(cfg), asdt::CapacityExceeded);
}
