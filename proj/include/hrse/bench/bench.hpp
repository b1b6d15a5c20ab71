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
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "hrse/asdt.hpp"
#include "hrse/baselines/wcycle.hpp"
#include "hrse/boolsys/solve.hpp"
#include "hrse/circuit/decompose.hpp"
#include "hrse/circuit/qasm.hpp"
#include "hrse/core/cost.hpp"
#include "hrse/core/metrics.hpp"
#include "hrse/synth/oracle.hpp"

namespace hrse::bench {

/// Runs body(i) for i in [0, count) on up to `threads` workers. Each index
/// writes only its own slot, so results do not depend on scheduling.
template <typename Body>
void parallel_for(std::size_t count, std::size_t threads, Body&& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

/// Seed of instance `i` for `n` variables.
inline std::uint64_t instance_seed(std::uint64_t seed, std::size_t n, std::size_t i) {
  return splitmix64(splitmix64(seed ^ (static_cast<std::uint64_t>(n) << 32)) + i);
}

enum class Method { Asdt, Wcycle };

inline const char* to_string(Method m) { return m == Method::Asdt ? "asdt" : "wcycle"; }

struct OracleOptions {
  circuit::Strategy strategy = circuit::Strategy::NoAncilla;
  bool peephole = false;
  synth::LeafStrategy leaves = synth::LeafStrategy::CostDesc;
};

/** Measurements of one synthesized phase oracle. */
struct OracleStats {
  std::size_t oracle_depth = 0;
  std::size_t iteration_depth = 0;
  std::size_t gates_total = 0;
  std::size_t gates_ccx = 0;
  std::size_t gates_native = 0;  // before decomposition, merges counted once
  std::size_t fallbacks = 0;
};

namespace detail {

inline circuit::Circuit lower(const circuit::Circuit& c, const circuit::DecompositionPlan& base, circuit::Strategy s,
                              bool peephole, std::size_t& fallbacks) {
  circuit::DecompositionPlan plan = base;
  plan.strategy = s;
  plan.fallback_to_no_ancilla = true;
  circuit::DecomposeStats st;
  auto out = circuit::decompose(c, plan, &st);
  fallbacks += st.fallbacks;
  if (peephole) out = circuit::cancel_adjacent_pairs(out);
  // Depths come from the emitted text, not the in-memory circuit.
  return circuit::parse_text(circuit::emit_text(out));
}

}  // namespace detail

/**
 * Phase oracle for `sys` on `tree`, lowered to {X, H, Z, CX, CCX}. The
 * iteration depth adds the diffuser, whose MCZ may use the whole pool.
 */
inline OracleStats measure_oracle(const HrseTree& tree, const boolsys::BooleanSystem& sys, std::size_t k,
                                  const OracleOptions& opt) {
  const auto layout = synth::allocate(tree, sys.n, k, synth::Mode::Phase);
  const auto res = synth::synthesize(tree, sys, layout, synth::assign_leaves(tree, sys, opt.leaves));
  OracleStats st;
  st.gates_native = res.circuit.size();
  const auto oracle = detail::lower(res.circuit, res.plan, opt.strategy, opt.peephole, st.fallbacks);

  circuit::DecompositionPlan diff_plan;
  diff_plan.clean_ancillas[2 * sys.n] = layout.block(0, k);
  const auto diffuser =
      detail::lower(synth::grover_diffuser(sys.n, layout.width()), diff_plan, opt.strategy, opt.peephole, st.fallbacks);

  st.oracle_depth = circuit::depth(oracle);
  st.iteration_depth = circuit::depth(circuit::concat(oracle, diffuser));
  st.gates_total = oracle.size();
  st.gates_ccx = circuit::gate_count(oracle, {circuit::GateKind::CCX});
  return st;
}

struct BenchConfig {
  std::vector<std::size_t> ns = {15, 20, 25};
  /// Budgets per variable count.
  std::map<std::size_t, std::vector<std::size_t>> ks = {{15, {4, 5, 6}}, {20, {4, 5, 6}}, {25, {5, 6, 7}}};
  std::vector<int> levels = {1, 2, 3};
  std::size_t instances = 15;
  std::uint64_t seed = 1;
  /// Equations per oracle; defaults to eqs_per_iteration_default(n).
  std::map<std::size_t, std::size_t> eqs_per_iteration;
  /// Generated systems carry n + extra equations so the solution is unique.
  std::size_t extra_equations = 3;
  bool root_bonus = true;
  OracleOptions oracle;
  std::size_t threads = 0;
};

/// (n - 5) * 2 / 5 + 1: 15 -> 5, 20 -> 7, 25 -> 9.
inline std::size_t eqs_per_iteration_default(std::size_t n) {
  if (n <= 5) return std::max<std::size_t>(1, n);
  return (n - 5) * 2 / 5 + 1;
}

inline std::size_t eqs_for(const BenchConfig& cfg, std::size_t n) {
  auto it = cfg.eqs_per_iteration.find(n);
  return it != cfg.eqs_per_iteration.end() ? it->second : eqs_per_iteration_default(n);
}

struct BenchRow {
  std::size_t n = 0, k = 0, eqs = 0;
  int level = 0;
  Method method = Method::Asdt;
  bool feasible = false;
  std::size_t instances = 0;
  double q_depth_mean = 0;
  double iter_depth_mean = 0;
  double gates_total = 0;
  double gates_ccx = 0;
  double gates_native = 0;
  std::size_t fallbacks = 0;
  Cost leaf_cost = 0;
  Ratio avg_leaf_depth{0, 1};
  Ratio avg_nonleaf_depth{0, 1};
  /// (baseline - ours) / baseline against the W-cycle row of the same cell.
  std::optional<double> opt_ratio;
  std::vector<std::size_t> instance_depths;
};

inline std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

inline const char* kCompareHeader =
    "n,k,level,method,instances,q_depth_mean,iter_depth_mean,gates_total,gates_ccx,leaf_cost_delta_units,"
    "avg_leaf_depth,avg_nonleaf_depth,opt_ratio,gates_native,fallbacks";

inline std::string to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << kCompareHeader << "\n";
  for (const auto& r : rows) {
    os << r.n << ',' << r.k << ',' << r.level << ',' << to_string(r.method) << ',' << r.instances << ',';
    if (!r.feasible) {
      os << "--,--,--,--,--,--,--,--,--,--\n";
      continue;
    }
    os << fixed(r.q_depth_mean, 1) << ',' << fixed(r.iter_depth_mean, 1) << ',' << fixed(r.gates_total, 1) << ','
       << fixed(r.gates_ccx, 1) << ',' << r.leaf_cost << ',' << fixed(r.avg_leaf_depth.value(), 2) << ','
       << fixed(r.avg_nonleaf_depth.value(), 2) << ','
       << (r.opt_ratio ? fixed(100.0 * *r.opt_ratio, 2) + "%" : std::string("--")) << ','
       << fixed(r.gates_native, 1) << ',' << r.fallbacks << "\n";
  }
  return os.str();
}

/// Generated systems for one variable count, in instance order.
inline std::vector<boolsys::BooleanSystem> instances_for(std::size_t n, std::size_t eq_count, std::size_t count,
                                                         std::uint64_t seed, std::size_t threads = 0) {
  std::vector<boolsys::BooleanSystem> out(count);
  boolsys::GenerateOptions g;
  g.allow_large = true;
  parallel_for(count, threads, [&](std::size_t i) {
    out[i] = boolsys::generate(n, eq_count, instance_seed(seed, n, i), g).system;
  });
  return out;
}

namespace detail {

inline void fill_row(BenchRow& row, const HrseTree& tree, const std::vector<boolsys::BooleanSystem>& systems,
                     std::size_t eqs, const BenchConfig& cfg) {
  std::vector<OracleStats> stats(systems.size());
  parallel_for(systems.size(), cfg.threads, [&](std::size_t i) {
    stats[i] = measure_oracle(tree, systems[i].prefix(eqs), row.k, cfg.oracle);
  });
  row.feasible = true;
  row.instances = systems.size();
  const auto inv = 1.0 / static_cast<double>(std::max<std::size_t>(1, systems.size()));
  for (const auto& s : stats) {
    row.q_depth_mean += static_cast<double>(s.oracle_depth) * inv;
    row.iter_depth_mean += static_cast<double>(s.iteration_depth) * inv;
    row.gates_total += static_cast<double>(s.gates_total) * inv;
    row.gates_ccx += static_cast<double>(s.gates_ccx) * inv;
    row.gates_native += static_cast<double>(s.gates_native) * inv;
    row.fallbacks += s.fallbacks;
    row.instance_depths.push_back(s.oracle_depth);
  }
  const auto m = metrics(tree);
  row.leaf_cost = hrse::leaf_cost(tree);
  row.avg_leaf_depth = m.avg_leaf_depth;
  row.avg_nonleaf_depth = m.avg_nonleaf_depth;
}

}  // namespace detail

/**
 * ASDT against the reconstructed W-cycle on every (n, k, level) cell. Each
 * instance is one oracle per Grover iteration, so the per-instance
 * iteration average is that oracle's depth; rows hold the mean over
 * instances. Infeasible W-cycle cells are reported, not raised.
 */
inline std::vector<BenchRow> compare(const BenchConfig& cfg) {
  std::vector<BenchRow> rows;
  for (std::size_t n : cfg.ns) {
    const std::size_t eqs = eqs_for(cfg, n);
    const auto systems = instances_for(n, std::max(n + cfg.extra_equations, eqs), cfg.instances, cfg.seed, cfg.threads);
    const auto ks = cfg.ks.count(n) ? cfg.ks.at(n) : std::vector<std::size_t>{};
    for (std::size_t k : ks) {
      for (int level : cfg.levels) {
        BenchRow w;
        w.n = n;
        w.k = k;
        w.eqs = eqs;
        w.level = level;
        w.method = Method::Wcycle;
        const auto wc = baselines::build_wcycle(
            {static_cast<int>(eqs), static_cast<int>(k), level, cfg.root_bonus});
        BenchRow a = w;
        a.method = Method::Asdt;
        if (wc.feasible()) detail::fill_row(w, *wc.tree, systems, eqs, cfg);
        const asdt::BuildSpec spec{static_cast<int>(eqs), static_cast<int>(k), cfg.root_bonus};
        if (static_cast<std::uint64_t>(eqs) <= asdt::capacity(spec.k, spec.root_bonus)) {
          detail::fill_row(a, asdt::build(spec).tree, systems, eqs, cfg);
        }
        if (w.feasible) w.opt_ratio = 0.0;
        if (w.feasible && a.feasible && w.q_depth_mean > 0) {
          a.opt_ratio = (w.q_depth_mean - a.q_depth_mean) / w.q_depth_mean;
        }
        rows.push_back(std::move(w));
        rows.push_back(std::move(a));
      }
    }
  }
  return rows;
}

struct SweepConfig {
  std::vector<std::size_t> ns = {9, 10, 11, 12, 13, 14, 15, 16};
  std::vector<std::size_t> ks = {5, 6, 7, 8, 9, 10};
  std::size_t instances = 15;
  std::uint64_t seed = 1;
  bool root_bonus = true;
  OracleOptions oracle;
  std::size_t threads = 0;
};

struct SweepRow {
  std::size_t n = 0, k = 0, m = 0;
  std::size_t instances = 0;
  double q_depth_mean = 0;
  double iter_depth_mean = 0;
  double gates_total = 0;
  Cost leaf_cost = 0;
  Ratio avg_leaf_depth{0, 1};
  /// The root holds every function as a direct child.
  bool flat = false;
  std::vector<std::size_t> instance_depths;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // ordered by n, then k

  std::vector<const SweepRow*> column(std::size_t n) const {
    std::vector<const SweepRow*> col;
    for (const auto& r : rows) {
      if (r.n == n) col.push_back(&r);
    }
    return col;
  }

  /// Mean depth over instances is non-increasing in k.
  bool monotone(std::size_t n) const {
    const auto col = column(n);
    for (std::size_t i = 1; i < col.size(); ++i) {
      if (col[i]->q_depth_mean > col[i - 1]->q_depth_mean) return false;
    }
    return true;
  }

  /// (instance, k) pairs whose own depth rose from k-1 to k.
  std::vector<std::pair<std::size_t, std::size_t>> instance_increases(std::size_t n) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const auto col = column(n);
    for (std::size_t i = 1; i < col.size(); ++i) {
      for (std::size_t j = 0; j < col[i]->instance_depths.size(); ++j) {
        if (col[i]->instance_depths[j] > col[i - 1]->instance_depths[j]) out.emplace_back(j, col[i]->k);
      }
    }
    return out;
  }

  /// First k after which every instance's depth stays unchanged.
  std::optional<std::size_t> plateau(std::size_t n) const {
    const auto col = column(n);
    if (col.size() < 2) return std::nullopt;
    std::size_t start = col.size() - 1;
    while (start > 0 && col[start - 1]->instance_depths == col.back()->instance_depths) --start;
    if (start == col.size() - 1) return std::nullopt;
    return col[start]->k;
  }

  std::string to_csv() const {
    std::ostringstream os;
    os << "n,k,m,instances,q_depth_mean,iter_depth_mean,gates_total,leaf_cost_delta_units,avg_leaf_depth,flat,"
          "plateau\n";
    for (const auto& r : rows) {
      const auto p = plateau(r.n);
      os << r.n << ',' << r.k << ',' << r.m << ',' << r.instances << ',' << fixed(r.q_depth_mean, 1) << ','
         << fixed(r.iter_depth_mean, 1) << ',' << fixed(r.gates_total, 1) << ',' << r.leaf_cost << ','
         << fixed(r.avg_leaf_depth.value(), 2) << ',' << (r.flat ? 1 : 0) << ',' << (p && r.k >= *p ? 1 : 0) << "\n";
    }
    return os.str();
  }

  /// One block per n ("k depth" lines), blocks separated by two blank lines.
  std::string to_gnuplot() const {
    std::ostringstream os;
    std::optional<std::size_t> current;
    for (const auto& r : rows) {
      if (current != r.n) {
        if (current) os << "\n\n";
        os << "# n=" << r.n << "\n";
        current = r.n;
      }
      os << r.k << ' ' << fixed(r.q_depth_mean, 1) << "\n";
    }
    return os.str();
  }
};

/**
 * ASDT oracle depth against the pool size, with every generated equation
 * (m = n) in a single oracle.
 */
inline SweepResult sweep(const SweepConfig& cfg) {
  SweepResult out;
  for (std::size_t n : cfg.ns) {
    const auto systems = instances_for(n, n, cfg.instances, cfg.seed, cfg.threads);
    for (std::size_t k : cfg.ks) {
      SweepRow row;
      row.n = n;
      row.k = k;
      row.m = n;
      const asdt::BuildSpec spec{static_cast<int>(n), static_cast<int>(k), cfg.root_bonus};
      if (static_cast<std::uint64_t>(n) > asdt::capacity(spec.k, spec.root_bonus)) {
        throw asdt::CapacityExceeded(spec.m, spec.k, asdt::capacity(spec.k, spec.root_bonus));
      }
      const auto tree = asdt::build(spec).tree;
      std::vector<OracleStats> stats(systems.size());
      parallel_for(systems.size(), cfg.threads,
                   [&](std::size_t i) { stats[i] = measure_oracle(tree, systems[i], k, cfg.oracle); });
      row.instances = systems.size();
      const auto inv = 1.0 / static_cast<double>(std::max<std::size_t>(1, systems.size()));
      for (const auto& s : stats) {
        row.q_depth_mean += static_cast<double>(s.oracle_depth) * inv;
        row.iter_depth_mean += static_cast<double>(s.iteration_depth) * inv;
        row.gates_total += static_cast<double>(s.gates_total) * inv;
        row.instance_depths.push_back(s.oracle_depth);
      }
      row.leaf_cost = hrse::leaf_cost(tree);
      row.avg_leaf_depth = metrics(tree).avg_leaf_depth;
      row.flat = tree.max_depth() <= 1;
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace hrse::bench
