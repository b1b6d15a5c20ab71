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

// Command-line front end: tree construction, cost evaluation, oracle
// synthesis and verification, and the comparison / sweep harness.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hrse/hrse.hpp"

namespace {

using namespace hrse;

struct Globals {
  std::uint64_t seed = 1;
  std::string gamma = "unit";
  std::string decompose = "noancilla";
  bool root_bonus = false;
  std::string csv;
  std::string dot;
  bool peephole = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
}

// Writes to `path`, or stdout when it is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) std::cout << text;
  else write_file(path, text);
}

std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    try {
      if (dash != std::string::npos) {
        const auto lo = std::stoul(item.substr(0, dash)), hi = std::stoul(item.substr(dash + 1));
        for (auto v = lo; v <= hi; ++v) out.push_back(v);
      } else {
        out.push_back(std::stoul(item));
      }
    } catch (const std::exception&) {
      throw InvalidArgument("bad list item '" + item + "'");
    }
  }
  if (out.empty()) throw InvalidArgument("empty list");
  return out;
}

boolsys::BooleanSystem load_system(const std::string& path) {
  std::vector<boolsys::ParseWarning> warnings;
  auto sys = boolsys::parse(read_file(path), &warnings);
  for (const auto& w : warnings) std::cerr << path << ":" << w.line << ":" << w.column << ": warning: " << w.message << "\n";
  return sys;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HRSE oracle structures: build, cost, synthesize, verify and benchmark"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Random seed for generated instances and sampling");
  app.add_option("--gamma", g.gamma, "Merge cost model: unit | linear:a,b | quadratic:a,b,c | measured:g1,g2,...");
  app.add_option("--decompose", g.decompose, "MCX lowering: vchain | noancilla")
      ->check(CLI::IsMember({"vchain", "noancilla"}));
  app.add_flag("--root-bonus", g.root_bonus, "Root takes size k+1 (its merge hits the output or the phase)");
  app.add_option("--csv", g.csv, "Write CSV output to this path");
  app.add_option("--dot", g.dot, "Emit DOT (to PATH when given, else stdout)")->expected(0, 1);
  app.add_flag("--peephole", g.peephole, "Cancel adjacent identical gates after lowering");

  // tree
  auto* tree_cmd = app.add_subcommand("tree", "Build an HRSE tree");
  std::string method;
  int m = 0, k = 0, level = 1;
  bool trace = false;
  std::string tree_out;
  tree_cmd->add_option("method", method, "asdt | wcycle | optimal")
      ->required()
      ->check(CLI::IsMember({"asdt", "wcycle", "optimal"}));
  tree_cmd->add_option("-m", m, "Number of functions")->required();
  tree_cmd->add_option("-k", k, "Auxiliary qubit budget")->required();
  tree_cmd->add_option("--level", level, "W-cycle recursion level");
  tree_cmd->add_flag("--trace", trace, "Print the ASDT build trace");
  tree_cmd->add_option("-o,--out", tree_out, "Write the tree text to this path");

  // cost
  auto* cost_cmd = app.add_subcommand("cost", "Evaluate the gate cost of a tree");
  std::string tree_path;
  Cost delta = 1;
  cost_cmd->add_option("--tree", tree_path, "Tree file")->required();
  cost_cmd->add_option("--delta", delta, "Per-function gate cost");

  // synth / verify share the oracle options
  std::string system_path, mode_name = "phase", leaves_name = "cost_desc", out_path, circuit_path;
  std::size_t synth_k = 0, samples = 0;
  bool lower = false, show_layout = false;
  auto add_oracle_options = [&](CLI::App* cmd) {
    cmd->add_option("--system", system_path, "ANF system file")->required();
    cmd->add_option("-k", synth_k, "Auxiliary qubit budget")->required();
    cmd->add_option("--tree", tree_path, "Tree file (default: ASDT for the system)");
    cmd->add_option("--mode", mode_name, "xor | phase")->check(CLI::IsMember({"xor", "phase"}));
    cmd->add_option("--leaves", leaves_name, "Leaf assignment: by_index | cost_desc")
        ->check(CLI::IsMember({"by_index", "cost_desc"}));
  };
  auto* synth_cmd = app.add_subcommand("synth", "Synthesize an oracle circuit");
  add_oracle_options(synth_cmd);
  synth_cmd->add_flag("--lower", lower, "Decompose MCX/MCZ to {X,H,Z,CX,CCX}");
  synth_cmd->add_flag("--layout", show_layout, "Print the qubit layout instead of the circuit");
  synth_cmd->add_option("-o,--out", out_path, "Write the circuit to this path");

  auto* verify_cmd = app.add_subcommand("verify", "Check an oracle on basis inputs");
  add_oracle_options(verify_cmd);
  verify_cmd->add_option("--circuit", circuit_path, "Verify this circuit file instead of synthesizing");
  verify_cmd->add_option("--samples", samples, "Random inputs to check (0 = all)");

  // bruteforce
  auto* brute_cmd = app.add_subcommand("bruteforce", "Minimum leaf cost by exhaustive DP");
  brute_cmd->add_option("-m", m, "Number of functions")->required();
  brute_cmd->add_option("-k", k, "Auxiliary qubit budget")->required();

  // generate
  auto* gen_cmd = app.add_subcommand("generate", "Random quadratic system with a unique solution");
  std::size_t gen_n = 0, gen_eqs = 0;
  gen_cmd->add_option("-n", gen_n, "Variables")->required();
  gen_cmd->add_option("-e,--equations", gen_eqs, "Equations")->required();
  gen_cmd->add_option("-o,--out", out_path, "Write the system to this path");

  // compare / sweep
  std::string ns_text, ks_text, levels_text = "1-3";
  std::size_t instances = 0, eqs = 0, threads = 0;
  std::string plot_path;
  auto* cmp_cmd = app.add_subcommand("compare", "ASDT against W-cycle (CSV)");
  cmp_cmd->add_option("--n", ns_text, "Variable counts, e.g. 15,20,25");
  cmp_cmd->add_option("--k", ks_text, "Budgets for every n, e.g. 4,5,6 (default: per n)");
  cmp_cmd->add_option("--levels", levels_text, "W-cycle levels, e.g. 1-3");
  cmp_cmd->add_option("--instances", instances, "Systems per variable count");
  cmp_cmd->add_option("--eqs", eqs, "Equations per oracle (default: 15->5, 20->7, 25->9)");
  cmp_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* sweep_cmd = app.add_subcommand("sweep", "ASDT depth against the pool size (CSV)");
  sweep_cmd->add_option("--n", ns_text, "Variable counts, e.g. 9-16");
  sweep_cmd->add_option("--k", ks_text, "Budgets, e.g. 5-10");
  sweep_cmd->add_option("--instances", instances, "Systems per variable count");
  sweep_cmd->add_option("--plot", plot_path, "Write gnuplot data to this path");
  sweep_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const bool want_dot = app.count("--dot") > 0;
  try {
    const auto strategy = circuit::parse_strategy(g.decompose);

    if (*tree_cmd) {
      HrseTree t(1);
      if (method == "asdt") {
        auto r = asdt::build({m, k, g.root_bonus});
        if (trace) std::cout << r.trace.to_text();
        t = std::move(r.tree);
      } else if (method == "wcycle") {
        auto r = baselines::build_wcycle({m, k, level, g.root_bonus});
        if (!r.feasible()) {
          std::cout << "infeasible: " << r.infeasible->to_string() << "\n";
          return 3;
        }
        if (!r.hrse_valid()) std::cerr << "warning: W-cycle tree breaks the size rules:\n" << r.validation.to_string();
        t = std::move(*r.tree);
      } else {
        t = baselines::min_leaf_cost(m, k, g.root_bonus).witness;
      }
      if (want_dot) {
        emit(g.dot, export_dot(t));
      } else if (!trace || !tree_out.empty()) {
        emit(tree_out, serialize(t));
      }
      return 0;
    }

    if (*cost_cmd) {
      DeserializeOptions opts;
      opts.validate_options.allow_equal_parent_size = true;
      const auto t = deserialize(read_file(tree_path), opts);
      const auto model = CostModel::uniform(delta, GammaModel::parse(g.gamma));
      const auto expr = evaluate_closed_form(t, model);
      const auto post = evaluate_postorder(t, model);
      const auto mt = metrics(t);
      std::cout << "symbolic=" << expr.to_string() << "\n"
                << "total=" << *expr.numeric_value << "\n"
                << "postorder_total=" << *post.attr(post.root()).cost->numeric_value << "\n"
                << "gamma=" << model.gamma.to_string() << " delta=" << delta << "\n"
                << "leaves=" << mt.leaf_count << " leaf_cost=" << leaf_cost(t) << "\n"
                << "avg_leaf_depth=" << mt.avg_leaf_depth.to_string()
                << " avg_nonleaf_depth=" << mt.avg_nonleaf_depth.to_string()
                << " avg_all_node_depth=" << mt.avg_all_node_depth.to_string() << " max_depth=" << mt.max_depth
                << "\n";
      return 0;
    }

    if (*synth_cmd || *verify_cmd) {
      const auto sys = load_system(system_path);
      const auto mode = synth::parse_mode(mode_name);
      const HrseTree t = tree_path.empty()
                             ? asdt::build({static_cast<int>(sys.equations.size()), static_cast<int>(synth_k),
                                            g.root_bonus})
                                   .tree
                             : deserialize(read_file(tree_path));
      const auto layout = synth::allocate(t, sys.n, synth_k, mode);
      const auto assignment = synth::assign_leaves(t, sys, synth::parse_leaf_strategy(leaves_name));
      if (*synth_cmd) {
        if (show_layout) {
          emit(out_path, layout.to_text(t));
          return 0;
        }
        auto res = synth::synthesize(t, sys, layout, assignment);
        circuit::Circuit c = res.circuit;
        if (lower) {
          res.plan.strategy = strategy;
          res.plan.fallback_to_no_ancilla = true;
          circuit::DecomposeStats st;
          c = circuit::decompose(c, res.plan, &st);
          if (st.fallbacks) std::cerr << "note: " << st.fallbacks << " vchain gates lacked ancillas; lowered without\n";
        }
        if (g.peephole) c = circuit::cancel_adjacent_pairs(c);
        emit(out_path, circuit::emit_text(c));
        return 0;
      }
      const circuit::Circuit c = circuit_path.empty() ? synth::synthesize(t, sys, layout, assignment).circuit
                                                      : circuit::parse_text(read_file(circuit_path));
      const auto coverage = samples ? sim::Coverage::sample(samples, g.seed) : sim::Coverage::exhaustive();
      const auto report = sim::verify_oracle(c, sys, mode, coverage);
      std::cout << report.to_text();
      if (!g.csv.empty()) write_file(g.csv, report.to_csv());
      return report.ok() ? 0 : 2;
    }

    if (*brute_cmd) {
      const auto cert = baselines::min_leaf_cost(m, k, g.root_bonus);
      std::cout << cert.to_text();
      return cert.asdt_optimal() ? 0 : 2;
    }

    if (*gen_cmd) {
      boolsys::GenerateOptions opt;
      opt.allow_large = true;
      const auto gs = boolsys::generate(gen_n, gen_eqs, g.seed, opt);
      emit(out_path, "# planted solution (x1 first): " + [&] {
        std::string bits;
        for (std::size_t i = 0; i < gen_n; ++i) bits += ((gs.planted >> i) & 1) ? '1' : '0';
        return bits;
      }() + "\n" + boolsys::emit(gs.system));
      return 0;
    }

    bench::OracleOptions oracle;
    oracle.strategy = strategy;
    oracle.peephole = g.peephole;

    if (*cmp_cmd) {
      bench::BenchConfig cfg;
      cfg.seed = g.seed;
      cfg.root_bonus = true;
      cfg.oracle = oracle;
      cfg.threads = threads;
      if (!ns_text.empty()) cfg.ns = parse_list(ns_text);
      if (!ks_text.empty()) {
        const auto ks = parse_list(ks_text);
        for (auto n : cfg.ns) cfg.ks[n] = ks;
      }
      for (auto n : cfg.ns) {
        if (!cfg.ks.count(n)) throw InvalidArgument("no default budgets for n=" + std::to_string(n) + "; pass --k");
        if (eqs) cfg.eqs_per_iteration[n] = eqs;
      }
      cfg.levels.clear();
      for (auto l : parse_list(levels_text)) cfg.levels.push_back(static_cast<int>(l));
      if (instances) cfg.instances = instances;
      emit(g.csv, bench::to_csv(bench::compare(cfg)));
      return 0;
    }

    if (*sweep_cmd) {
      bench::SweepConfig cfg;
      cfg.seed = g.seed;
      cfg.oracle = oracle;
      cfg.threads = threads;
      if (!ns_text.empty()) cfg.ns = parse_list(ns_text);
      if (!ks_text.empty()) cfg.ks = parse_list(ks_text);
      if (instances) cfg.instances = instances;
      const auto res = bench::sweep(cfg);
      emit(g.csv, res.to_csv());
      if (!plot_path.empty()) write_file(plot_path, res.to_gnuplot());
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
