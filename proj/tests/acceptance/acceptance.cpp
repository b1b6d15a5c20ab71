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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// fails. `acceptance --out DIR` also writes every artifact to DIR.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hrse/hrse.hpp"
#include "oracles.hpp"

using namespace hrse;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::string artifact;  // compared byte for byte by the determinism check
};

struct Context {
  std::size_t threads = 0;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome(const Context&)> run;
};

// Collects failures without stopping, so the detail lists the first few.
class Checker {
 public:
  void require(bool cond, const std::string& what) {
    if (cond) return;
    ++failures_;
    if (first_.size() < 3) first_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  std::string summary(const std::string& on_success) const {
    if (ok()) return on_success;
    std::string s = std::to_string(failures_) + " failure(s): ";
    for (std::size_t i = 0; i < first_.size(); ++i) s += (i ? "; " : "") + first_[i];
    return s;
  }

 private:
  std::size_t failures_ = 0;
  std::vector<std::string> first_;
};

std::string fmt(double v, int digits) { return bench::fixed(v, digits); }

Outcome golden_trace(const Context&) {
  const auto r = asdt::build({7, 5, false});
  const std::string want =
      "split node=0 size=5 depth=0 -> 4 3\n"
      "add node=0 size=5 depth=0 -> 2\n"
      "add node=0 size=5 depth=0 -> 1\n"
      "split node=1 size=4 depth=1 -> 3 2\n"
      "add node=1 size=4 depth=1 -> 1\n"
      "split node=2 size=3 depth=1 -> 2 1\n";
  // Node ids in creation order: root, its four children, then 4's and 3's.
  const std::vector<int> sizes{5, 4, 3, 2, 1, 3, 2, 1, 2, 1};
  const std::vector<std::optional<NodeId>> parents{std::nullopt, 0, 0, 0, 0, 1, 1, 1, 2, 2};
  const auto expected = HrseTree::from_parents(sizes, parents);
  Outcome o;
  o.artifact = r.trace.to_text() + serialize(r.tree);
  const bool trace_ok = r.trace.to_text() == want && r.trace.steps.size() == 6;
  const bool tree_ok = r.tree.leaf_count() == 7 && serialize(r.tree) == serialize(expected);
  o.ok = trace_ok && tree_ok;
  o.detail = std::string("6-step trace ") + (trace_ok ? "matches" : "differs") + ", tree " +
             (tree_ok ? "matches" : "differs");
  return o;
}

Outcome optimality(const Context&) {
  Checker chk;
  std::ostringstream art;
  std::size_t cases = 0, enumerated = 0;
  for (int k = 3; k <= 7; ++k) {
    for (bool bonus : {false, true}) {
      const int cap = static_cast<int>(std::min<std::uint64_t>(asdt::capacity(k, bonus), 32));
      for (int m = 1; m <= cap; ++m) {
        const auto cert = baselines::min_leaf_cost(m, k, bonus);
        ++cases;
        art << k << ' ' << bonus << ' ' << m << ' ' << cert.min_leaf_cost << ' ' << cert.asdt_leaf_cost << '\n';
        chk.require(cert.asdt_optimal(), "k=" + std::to_string(k) + " m=" + std::to_string(m));
      }
    }
  }
  for (int k = 1; k <= 5; ++k) {
    for (bool bonus : {false, true}) {
      const int cap = static_cast<int>(asdt::capacity(k, bonus));
      for (int m = 1; m <= cap; ++m) {
        const auto trees = baselines::enumerate_valid_trees(m, k, 5'000'000, bonus);
        Cost best = baselines::LeafCostTable::kInf;
        for (const auto& t : trees) best = std::min(best, leaf_cost(t));
        enumerated += trees.size();
        chk.require(best == baselines::min_leaf_cost(m, k, bonus).min_leaf_cost,
                    "enumeration k=" + std::to_string(k) + " m=" + std::to_string(m));
      }
    }
  }
  Outcome o;
  o.ok = chk.ok();
  o.detail = chk.summary(std::to_string(cases) + " (m,k) cases optimal; DP matched " + std::to_string(enumerated) +
                         " enumerated trees for k<=5");
  o.artifact = art.str();
  return o;
}

Outcome cost_identity(const Context&) {
  Checker chk;
  std::mt19937_64 rng(1);
  const std::vector<GammaModel> gammas{GammaModel::unit(), GammaModel::linear(3, 2),
                                       GammaModel::quadratic(1, 1, 1),
                                       GammaModel::measured({0, 1, 12, 20, 28, 36, 44, 52, 60, 68})};
  std::ostringstream art;
  for (int i = 0; i < 1000; ++i) {
    const int k = 1 + static_cast<int>(rng() % 10);
    const auto t = oracles::random_valid_tree(rng, k, 64);
    for (const auto& g : gammas) {
      const auto model = CostModel::uniform(1 + static_cast<Cost>(rng() % 30), g);
      const auto post = evaluate_postorder(t, model);
      const auto closed = evaluate_closed_form(t, model);
      const auto& root = *post.attr(post.root()).cost;
      chk.require(root.symbolic_equal(closed) && root.numeric_value == closed.numeric_value,
                  "tree " + std::to_string(i) + " gamma " + g.to_string());
      art << *closed.numeric_value << ' ';
    }
    art << '\n';
  }
  Outcome o;
  o.ok = chk.ok();
  o.detail = chk.summary("1000 trees x 4 Gamma models agree symbolically and numerically");
  o.artifact = art.str();
  return o;
}

Outcome validity(const Context&) {
  Checker chk;
  std::size_t asdt_trees = 0, wc_trees = 0, flagged = 0;
  std::ostringstream art;
  for (int k = 1; k <= 10; ++k) {
    for (bool bonus : {false, true}) {
      const int cap = static_cast<int>(asdt::capacity(k, bonus));
      for (int m = 1; m <= cap; ++m) {
        const auto t = asdt::build({m, k, bonus}).tree;
        ++asdt_trees;
        const auto rep = validate(t);
        chk.require(rep.ok() && static_cast<int>(t.leaf_count()) == m,
                    "asdt m=" + std::to_string(m) + " k=" + std::to_string(k));
      }
      for (int level = 1; level <= 3; ++level) {
        for (int m = 1; m <= 40; ++m) {
          const auto w = baselines::build_wcycle({m, k, level, bonus});
          if (!w.feasible()) continue;
          ++wc_trees;
          const auto rep = validate(*w.tree);
          // The only relaxation: a lone function below a size-2 node.
          bool relaxed_only = true;
          for (const auto& v : rep.violations) {
            relaxed_only = relaxed_only && v.kind == ViolationKind::SmallNodeNotLeaf &&
                           w.tree->out_degree(v.nodes.front()) == 1;
          }
          chk.require(relaxed_only && w.hrse_valid() == rep.ok(),
                      "wcycle m=" + std::to_string(m) + " k=" + std::to_string(k));
          if (!rep.ok()) ++flagged;
          art << m << ' ' << k << ' ' << level << ' ' << bonus << ' ' << rep.ok() << '\n';
        }
      }
    }
  }
  Outcome o;
  o.ok = chk.ok();
  o.detail = chk.summary(std::to_string(asdt_trees) + " asdt trees valid; " + std::to_string(wc_trees) +
                         " feasible W-cycle trees, " + std::to_string(flagged) + " flagged for single-child layers");
  o.artifact = art.str();
  return o;
}

Outcome model_circuit(const Context&) {
  Checker chk;
  std::mt19937_64 rng(5);
  std::ostringstream art;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 4 + static_cast<std::size_t>(i % 7);
    const int k = 4 + i % 5;
    const bool bonus = i % 2 == 0;
    const int cap = static_cast<int>(std::min<std::uint64_t>(asdt::capacity(k, bonus), 12));
    const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cap));
    const auto sys = boolsys::generate(n, static_cast<std::size_t>(m), rng(), {.require_unique = false}).system;
    const auto t = asdt::build({m, k, bonus}).tree;
    const auto layout = synth::allocate(t, n, static_cast<std::size_t>(k), synth::Mode::Xor);
    const auto as = synth::assign_leaves(t, sys, synth::LeafStrategy::CostDesc);
    CostModel model = CostModel::uniform(1);
    model.leaf_delta = synth::leaf_deltas(sys, as);
    const Cost predicted = *evaluate_closed_form(t, model).numeric_value;
    const auto gates = static_cast<Cost>(synth::synthesize(t, sys, layout, as).circuit.size());
    chk.require(predicted == gates, "system " + std::to_string(i));
    art << n << ' ' << m << ' ' << k << ' ' << gates << ' ' << predicted << '\n';
  }
  Outcome o;
  o.ok = chk.ok();
  o.detail = chk.summary("50 systems: synthesized gate count equals the closed-form cost");
  o.artifact = art.str();
  return o;
}

Outcome oracle_semantics(const Context&) {
  Checker chk;
  std::mt19937_64 rng(6);
  std::ostringstream art;
  std::size_t runs = 0;
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 3 + static_cast<std::size_t>(i % 10);
    const int k = 4 + i % 5;
    const bool bonus = i % 3 != 0;
    const int cap = static_cast<int>(std::min<std::uint64_t>(asdt::capacity(k, bonus), n + 3));
    const int m = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cap));
    const auto sys = boolsys::generate(n, static_cast<std::size_t>(m), rng(), {.require_unique = false}).system;
    const auto t = asdt::build({m, k, bonus}).tree;
    for (auto mode : {synth::Mode::Phase, synth::Mode::Xor}) {
      const auto r = synth::synthesize(t, sys, static_cast<std::size_t>(k), mode, synth::LeafStrategy::CostDesc);
      auto rep = sim::verify_oracle(r.circuit, sys, mode);
      chk.require(rep.ok() && rep.inputs_checked == (std::size_t{1} << n), "system " + std::to_string(i));
      art << rep.to_text();
      ++runs;
      // Lowered phase oracles need the statevector, so only narrow ones.
      if (mode == synth::Mode::Xor || r.circuit.width() <= 12) {
        for (auto strategy : {circuit::Strategy::VChain, circuit::Strategy::NoAncilla}) {
          auto plan = r.plan;
          plan.strategy = strategy;
          plan.fallback_to_no_ancilla = true;
          rep = sim::verify_oracle(circuit::decompose(r.circuit, plan), sys, mode);
          chk.require(rep.ok(), "lowered system " + std::to_string(i));
          art << rep.to_text();
          ++runs;
        }
      }
    }
  }
  Outcome o;
  o.ok = chk.ok();
  o.detail = chk.summary("20 systems, " + std::to_string(runs) + " exhaustive runs, zero counterexamples");
  o.artifact = art.str();
  return o;
}

Outcome decomposition(const Context&) {
  Checker chk;
  std::ostringstream art;
  using circuit::Circuit;
  using circuit::Gate;
  using circuit::Qubit;
  for (Qubit nc = 2; nc <= 8; ++nc) {
    std::vector<Qubit> controls(nc);
    for (Qubit i = 0; i < nc; ++i) controls[i] = i;
    const Qubit target = nc;
    const std::uint64_t ctl = (std::uint64_t{1} << nc) - 1;
    const std::uint64_t visible = (std::uint64_t{1} << (nc + 1)) - 1;

    // vchain: ancillas nc+1.. start and must end clean.
    Circuit v(nc + 1 + (nc - 2));
    v.add(Gate::controlled_x(controls, target));
    circuit::DecompositionPlan vp;
    for (Qubit a = nc + 1; a < v.width(); ++a) vp.clean_ancillas[0].push_back(a);
    const auto vl = circuit::decompose(v, vp);
    const sim::BasisProgram vprog(vl);
    for (std::uint64_t x = 0; x <= visible; ++x) {
      const auto out = vprog.run({x, 1});
      const std::uint64_t want = (x & ctl) == ctl ? x ^ (std::uint64_t{1} << target) : x;
      chk.require(out.bits == want && out.phase == 1, "vchain c=" + std::to_string(nc));
    }

    // noancilla: one extra qubit borrowed in either state.
    Circuit b(nc + 2);
    b.add(Gate::controlled_x(controls, target));
    circuit::DecompositionPlan bp;
    bp.strategy = circuit::Strategy::NoAncilla;
    const auto bl = circuit::decompose(b, bp);
    const sim::BasisProgram bprog(bl);
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << b.width()); ++x) {
      const auto out = bprog.run({x, 1});
      const std::uint64_t want = (x & ctl) == ctl ? x ^ (std::uint64_t{1} << target) : x;
      chk.require(out.bits == want && out.phase == 1, "noancilla c=" + std::to_string(nc));
    }
    art << nc << ' ' << vl.size() << ' ' << circuit::depth(vl) << ' ' << bl.size() << ' ' << circuit::depth(bl)
        << '\n';
  }
  double worst = 0;
  for (Qubit nc = 1; nc <= 4; ++nc) {
    std::vector<Qubit> controls(nc);
    for (Qubit i = 0; i < nc; ++i) controls[i] = i;
    Circuit c(nc + 2);  // 6 qubits at most
    c.add(Gate::mcz(controls, nc));
    for (auto strategy : {circuit::Strategy::VChain, circuit::Strategy::NoAncilla}) {
      circuit::DecompositionPlan plan;
      plan.strategy = strategy;
      plan.clean_ancillas[0] = {nc + 1};
      plan.fallback_to_no_ancilla = true;
      const auto low = circuit::decompose(c, plan);
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << c.width()); ++x) {
        // The vchain ancilla is only promised clean.
        if (strategy == circuit::Strategy::VChain && ((x >> (nc + 1)) & 1)) continue;
        const auto a = sim::apply_statevector(c, sim::StateVector(c.width(), x));
        const auto b = sim::apply_statevector(low, sim::StateVector(c.width(), x));
        for (std::size_t i = 0; i < a.dimension(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
      }
    }
  }
  chk.require(worst <= 1e-9, "MCZ statevector difference " + std::to_string(worst));
  Outcome o;
  o.ok = chk.ok();
  o.detail = chk.summary("MCX 2..8 controls exhaustive in both strategies; MCZ max |diff| " + fmt(worst, 12));
  o.artifact = art.str();
  return o;
}

Outcome table_mirror(const Context& ctx) {
  Checker chk;
  bench::BenchConfig cfg;
  cfg.threads = ctx.threads;
  const auto rows = bench::compare(cfg);
  // Rows alternate W-cycle, ASDT per (n, k, level).
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> asdt_depths;
  std::map<int, std::pair<double, int>> ratio_by_level;
  double ratio_sum = 0;
  int ratio_cells = 0, feasible = 0, instance_wins = 0, instance_pairs = 0;
  for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
    const auto& w = rows[i];
    const auto& a = rows[i + 1];
    const auto key = std::make_pair(a.n, a.k);
    if (!asdt_depths.count(key)) asdt_depths[key] = a.instance_depths;
    chk.require(asdt_depths[key] == a.instance_depths,
                "asdt depth varies with level at n=" + std::to_string(a.n) + " k=" + std::to_string(a.k));
    if (!w.feasible) continue;
    ++feasible;
    chk.require(a.q_depth_mean <= w.q_depth_mean, "asdt deeper than W-cycle at n=" + std::to_string(a.n) +
                                                      " k=" + std::to_string(a.k) + " level=" +
                                                      std::to_string(a.level));
    for (std::size_t j = 0; j < a.instance_depths.size(); ++j) {
      ++instance_pairs;
      instance_wins += a.instance_depths[j] <= w.instance_depths[j];
    }
    auto& [sum, count] = ratio_by_level[a.level];
    sum += *a.opt_ratio;
    ++count;
    ratio_sum += *a.opt_ratio;
    ++ratio_cells;
  }
  std::ostringstream levels;
  double prev = -1;
  for (const auto& [level, acc] : ratio_by_level) {
    const double mean = acc.first / acc.second;
    levels << " L" << level << "=" << fmt(100 * mean, 2) << "%";
    chk.require(mean >= prev, "mean ratio decreases at level " + std::to_string(level));
    prev = mean;
  }
  const double overall = ratio_cells ? ratio_sum / ratio_cells : 0;
  chk.require(overall > 0, "mean ratio not positive");
  Outcome o;
  o.ok = chk.ok();
  o.detail = chk.summary(std::to_string(feasible) + " feasible cells; asdt <= W-cycle in every cell (" +
                         std::to_string(instance_wins) + "/" + std::to_string(instance_pairs) +
                         " instances); mean ratio " + fmt(100 * overall, 2) + "%;" + levels.str());
  o.artifact = bench::to_csv(rows);
  return o;
}

Outcome infeasibility(const Context& ctx) {
  bench::BenchConfig cfg;
  cfg.ns = {15};
  cfg.ks = {{15, {4, 5}}};
  cfg.levels = {1};
  cfg.threads = ctx.threads;
  const auto csv = bench::to_csv(bench::compare(cfg));
  const bool blank = csv.find("\n15,4,1,wcycle,0,--,") != std::string::npos;
  const bool filled = csv.find("\n15,5,1,wcycle,15,") != std::string::npos &&
                      csv.find("\n15,5,1,wcycle,15,--") == std::string::npos;
  Outcome o;
  o.ok = blank && filled && bench::eqs_per_iteration_default(15) == 5;
  o.detail = std::string("(5 eqs, k=4, level 1) ") + (blank ? "--" : "filled") + ", (5 eqs, k=5, level 1) " +
             (filled ? "feasible" : "missing");
  o.artifact = csv;
  return o;
}

Outcome sweep_mirror(const Context& ctx) {
  Checker chk;
  bench::SweepConfig cfg;
  cfg.threads = ctx.threads;
  const auto res = bench::sweep(cfg);
  std::ostringstream info;
  std::size_t increases = 0, plateaus = 0;
  for (std::size_t n : cfg.ns) {
    chk.require(res.monotone(n), "mean depth rises with k at n=" + std::to_string(n));
    increases += res.instance_increases(n).size();
    const auto col = res.column(n);
    std::optional<std::size_t> first_flat;
    std::size_t flat_columns = 0;
    for (const auto* r : col) {
      if (!r->flat) continue;
      if (!first_flat) first_flat = r->k;
      ++flat_columns;
    }
    const auto p = res.plateau(n);
    if (p) ++plateaus;
    if (flat_columns >= 2) {
      chk.require(p && *p <= *first_flat, "no plateau from the flat threshold at n=" + std::to_string(n));
    }
    info << " n=" << n << ":" << fmt(col.front()->q_depth_mean, 1) << "->" << fmt(col.back()->q_depth_mean, 1);
    if (p) info << "(plateau k=" << *p << ")";
  }
  chk.require(plateaus > 0, "no plateau detected");
  Outcome o;
  o.ok = chk.ok();
  o.detail = chk.summary("mean depth non-increasing for every n; " + std::to_string(increases) +
                         " per-instance rises;" + info.str());
  o.artifact = res.to_csv() + res.to_gnuplot();
  return o;
}

Outcome leaf_depth(const Context&) {
  Checker chk;
  Ratio worst{0, 1};
  std::ostringstream art;
  for (int k = 6; k <= 10; ++k) {
    for (int m = 1; m <= 15; ++m) {
      const auto d = metrics(asdt::build({m, k, true}).tree).avg_leaf_depth;
      worst = std::max(worst, d);
      chk.require(d < Ratio{2, 1}, "k=" + std::to_string(k) + " m=" + std::to_string(m));
      art << k << ' ' << m << ' ' << d << '\n';
    }
  }
  Outcome o;
  o.ok = chk.ok();
  o.detail = chk.summary("max average leaf depth " + worst.to_string() + " < 2");
  o.artifact = art.str();
  return o;
}

Outcome grover(const Context&) {
  const auto g = boolsys::generate(4, 4, 7);
  const auto sols = boolsys::solutions(g.system);
  const auto t = asdt::build({4, 4, false}).tree;
  const double p = sim::grover_run(g.system, t, 4, 3);
  const double formula = sim::grover_success_formula(4, 1, 3);
  Outcome o;
  o.ok = sols.size() == 1 && std::abs(p - 0.961) <= 0.01 && std::abs(p - formula) < 1e-9;
  o.detail = "P(success, R=3) = " + fmt(p, 6) + ", analytic " + fmt(formula, 6);
  o.artifact = fmt(p, 12) + "\n";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::optional<std::filesystem::path> out_dir;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--out" && i + 1 < argc) {
      out_dir = argv[++i];
    } else {
      std::cerr << "usage: acceptance [--out DIR]\n";
      return 2;
    }
  }

  const std::vector<Criterion> criteria{
      {1, "golden trace m=7 k=5", 0.001, golden_trace},
      {2, "asdt optimality", 60, optimality},
      {3, "post-order cost equals closed form", 5, cost_identity},
      {4, "tree validity", 0, validity},
      {5, "model and circuit gate counts", 30, model_circuit},
      {6, "oracle semantics", 120, oracle_semantics},
      {7, "decomposition correctness", 0, decomposition},
      {8, "level invariance and dominance", 600, table_mirror},
      {9, "W-cycle infeasibility pattern", 0, infeasibility},
      {10, "space-depth sweep", 600, sweep_mirror},
      {11, "average leaf depth below 2", 1, leaf_depth},
      {12, "grover end to end", 10, grover},
  };

  using clock = std::chrono::steady_clock;
  bool all_ok = true;
  std::vector<std::string> artifacts;
  const Context first{0};
  for (const auto& c : criteria) {
    const auto t0 = clock::now();
    Outcome o;
    try {
      o = c.run(first);
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(clock::now() - t0).count();
    const bool in_time = c.budget_seconds <= 0 || secs < c.budget_seconds;
    const bool ok = o.ok && in_time;
    all_ok = all_ok && ok;
    std::printf("[%s] %d: %s (%.3f s%s) %s\n", ok ? "PASS" : "FAIL", c.id, c.name, secs,
                in_time ? "" : ", over budget", o.detail.c_str());
    std::fflush(stdout);
    artifacts.push_back(o.artifact);
    if (out_dir) {
      std::filesystem::create_directories(*out_dir);
      std::ofstream(*out_dir / ("criterion" + std::to_string(c.id) + ".txt"), std::ios::binary) << o.artifact;
    }
  }

  // Second pass with a different worker count; every artifact must match.
  const auto t0 = clock::now();
  const Context second{2};
  std::vector<int> differing;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string again;
    try {
      again = criteria[i].run(second).artifact;
    } catch (const std::exception&) {
      again = "<exception>";
    }
    if (again != artifacts[i] || artifacts[i].empty()) differing.push_back(criteria[i].id);
  }
  const double secs = std::chrono::duration<double>(clock::now() - t0).count();
  std::string detail = "artifacts of criteria 1-12 byte-identical on rerun";
  if (!differing.empty()) {
    detail = "artifacts differ for criteria";
    for (int id : differing) detail += " " + std::to_string(id);
  }
  all_ok = all_ok && differing.empty();
  std::printf("[%s] 13: determinism (%.3f s) %s\n", differing.empty() ? "PASS" : "FAIL", secs, detail.c_str());
  return all_ok ? 0 : 1;
}
