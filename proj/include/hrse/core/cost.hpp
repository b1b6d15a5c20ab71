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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hrse/core/cost_expr.hpp"
#include "hrse/core/tree.hpp"

namespace hrse {

/**
 * Merge-gate cost Gamma(kappa) for a node with kappa children.
 *
 *   unit       1
 *   linear     a*kappa + b
 *   quadratic  a*kappa^2 + b*kappa + c
 *   measured   table[kappa], looked up from a list starting at kappa = 1
 */
class GammaModel {
 public:
  enum class Kind { Unit, Linear, Quadratic, Measured };

  static GammaModel unit() { return GammaModel(Kind::Unit, {}, {}); }
  static GammaModel linear(Cost a, Cost b) { return checked(GammaModel(Kind::Linear, {a, b}, {})); }
  static GammaModel quadratic(Cost a, Cost b, Cost c) {
    return checked(GammaModel(Kind::Quadratic, {a, b, c}, {}));
  }
  /// `table[i]` is Gamma(i + 1).
  static GammaModel measured(std::vector<Cost> table) {
    if (table.empty()) throw InvalidArgument("measured Gamma table is empty");
    return checked(GammaModel(Kind::Measured, {}, std::move(table)));
  }

  /** Parses "unit", "linear:a,b", "quadratic:a,b,c" or "measured:g1,g2,...". */
  static GammaModel parse(const std::string& text) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    std::vector<Cost> args;
    if (colon != std::string::npos) {
      std::string rest = text.substr(colon + 1);
      std::size_t pos = 0;
      while (pos <= rest.size()) {
        const auto comma = rest.find(',', pos);
        const std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
          std::size_t used = 0;
          args.push_back(std::stoll(item, &used));
          if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
          throw InvalidArgument("bad Gamma parameter '" + item + "' in '" + text + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
    }
    auto want = [&](std::size_t n) {
      if (args.size() != n) {
        throw InvalidArgument(
            "Gamma model '" + name + "' expects " + std::to_string(n) + " parameters");
      }
    };
    if (name == "unit") {
      want(0);
      return unit();
    }
    if (name == "linear") {
      want(2);
      return linear(args[0], args[1]);
    }
    if (name == "quadratic") {
      want(3);
      return quadratic(args[0], args[1], args[2]);
    }
    if (name == "measured") return measured(args);
    throw InvalidArgument("unknown Gamma model '" + name + "'");
  }

  Kind kind() const { return kind_; }

  Cost operator()(int kappa) const {
    if (kappa < 1) throw InvalidArgument("Gamma is defined for kappa >= 1");
    const Cost k = kappa;
    switch (kind_) {
      case Kind::Unit: return 1;
      case Kind::Linear: return params_[0] * k + params_[1];
      case Kind::Quadratic: return params_[0] * k * k + params_[1] * k + params_[2];
      case Kind::Measured:
        if (static_cast<std::size_t>(kappa) > table_.size()) {
          throw InvalidArgument(
              "measured Gamma table has no entry for kappa=" + std::to_string(kappa));
        }
        return table_[kappa - 1];
    }
    return 0;
  }

  std::string to_string() const {
    auto join = [](const std::vector<Cost>& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s;
    };
    switch (kind_) {
      case Kind::Unit: return "unit";
      case Kind::Linear: return "linear:" + join(params_);
      case Kind::Quadratic: return "quadratic:" + join(params_);
      case Kind::Measured: return "measured:" + join(table_);
    }
    return "?";
  }

 private:
  GammaModel(Kind kind, std::vector<Cost> params, std::vector<Cost> table)
      : kind_(kind), params_(std::move(params)), table_(std::move(table)) {}

  // Gamma(1) >= 0, Gamma(kappa) >= 1 for kappa >= 2, non-decreasing.
  static GammaModel checked(GammaModel g) {
    const int horizon = g.kind_ == Kind::Measured ? static_cast<int>(g.table_.size()) : 256;
    Cost prev = g(1);
    if (prev < 0) throw InvalidArgument("Gamma(1) must be non-negative: " + g.to_string());
    for (int k = 2; k <= horizon; ++k) {
      const Cost cur = g(k);
      if (cur < 1) throw InvalidArgument("Gamma(" + std::to_string(k) + ") < 1: " + g.to_string());
      if (cur < prev) throw InvalidArgument("Gamma is decreasing at kappa=" + std::to_string(k));
      prev = cur;
    }
    return g;
  }

  Kind kind_;
  std::vector<Cost> params_;
  std::vector<Cost> table_;
};

/**
 * Leaf cost delta (uniform, or per leaf when `leaf_delta` is set) plus the
 * merge cost model.
 */
struct CostModel {
  Cost delta = 1;
  GammaModel gamma = GammaModel::unit();
  /// Per-leaf override of delta (per-function costs mapped onto leaves).
  std::optional<std::map<NodeId, Cost>> leaf_delta;

  static CostModel uniform(Cost delta, GammaModel gamma = GammaModel::unit()) {
    if (delta <= 0) throw InvalidArgument("delta must be positive");
    return CostModel{delta, std::move(gamma), std::nullopt};
  }

  Cost delta_of(NodeId leaf) const {
    if (leaf_delta) {
      auto it = leaf_delta->find(leaf);
      if (it == leaf_delta->end()) {
        throw InvalidArgument("no delta for leaf " + std::to_string(leaf));
      }
      return it->second;
    }
    return delta;
  }
};

/**
 * Annotates every node bottom-up: a leaf costs delta and covers one leaf, a
 * non-leaf costs twice the sum of its children (compute and uncompute) plus
 * Gamma(kappa) for its merge gate.
 */
inline HrseTree evaluate_postorder(const HrseTree& tree, const CostModel& model) {
  HrseTree out = tree;
  for (NodeId v : tree.postorder()) {
    const auto children = tree.children(v);
    if (children.empty()) {
      CostExpr leaf;
      leaf.delta_coeff = 1;
      leaf.numeric_value = model.delta_of(v);
      out.annotate(v, std::move(leaf), 1);
      continue;
    }
    CostExpr sum;
    sum.numeric_value = 0;
    int leaves = 0;
    for (NodeId c : children) {
      const auto& ca = out.attr(c);
      sum += ca.cost->scaled(2);
      leaves += *ca.leaves;
    }
    const int kappa = static_cast<int>(children.size());
    sum.gamma_terms[kappa] += 1;
    *sum.numeric_value += model.gamma(kappa);
    out.annotate(v, std::move(sum), leaves);
  }
  return out;
}

/**
 * Root cost as a direct sum over nodes: every leaf contributes
 * 2^depth * delta, every non-leaf 2^depth * Gamma(kappa).
 */
inline CostExpr evaluate_closed_form(const HrseTree& tree, const CostModel& model) {
  CostExpr out;
  Cost numeric = 0;
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    const int d = tree.depth(v);
    if (d >= 62) throw InvalidArgument("tree too deep for 64-bit cost arithmetic");
    const Cost weight = Cost{1} << d;
    if (tree.is_leaf(v)) {
      out.delta_coeff += weight;
      numeric += weight * model.delta_of(v);
    } else {
      const int kappa = tree.out_degree(v);
      out.gamma_terms[kappa] += weight;
      numeric += weight * model.gamma(kappa);
    }
  }
  out.numeric_value = numeric;
  return out;
}

/** The leaf term sum of 2^depth over leaves, in units of delta. */
inline Cost leaf_cost(const HrseTree& tree) {
  Cost total = 0;
  for (NodeId v : tree.leaves()) total += Cost{1} << tree.depth(v);
  return total;
}

}  // namespace hrse
