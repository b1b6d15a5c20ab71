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
#include <sstream>
#include <string>

namespace hrse {

using Cost = std::int64_t;

/**
 * Gate cost kept as a linear combination of the per-function cost `delta`
 * and the merge costs `Gamma(kappa)`, plus an optional numeric value once a
 * concrete CostModel has been applied.
 *
 * delta_coeff is the leaf term, gamma_terms the non-leaf term.
 */
struct CostExpr {
  Cost delta_coeff = 0;
  std::map<int, Cost> gamma_terms;  // kappa -> multiplier
  std::optional<Cost> numeric_value;

  CostExpr& operator+=(const CostExpr& other) {
    delta_coeff += other.delta_coeff;
    for (const auto& [kappa, mult] : other.gamma_terms) {
      gamma_terms[kappa] += mult;
    }
    if (numeric_value && other.numeric_value) {
      *numeric_value += *other.numeric_value;
    } else {
      numeric_value.reset();
    }
    return *this;
  }

  CostExpr scaled(Cost factor) const {
    CostExpr out = *this;
    out.delta_coeff *= factor;
    for (auto& [kappa, mult] : out.gamma_terms) mult *= factor;
    if (out.numeric_value) *out.numeric_value *= factor;
    return out;
  }

  /** Same delta/Gamma multipliers, ignoring numeric_value. */
  bool symbolic_equal(const CostExpr& other) const {
    return delta_coeff == other.delta_coeff && gamma_terms == other.gamma_terms;
  }

  Cost gamma_multiplier(int kappa) const {
    auto it = gamma_terms.find(kappa);
    return it == gamma_terms.end() ? 0 : it->second;
  }

  /** e.g. "24*d + G(4) + 2*G(3) + 2*G(2)", Gamma terms by decreasing kappa. */
  std::string to_string() const {
    std::ostringstream os;
    os << delta_coeff << "*d";
    for (auto it = gamma_terms.rbegin(); it != gamma_terms.rend(); ++it) {
      if (it->second == 0) continue;
      os << " + ";
      if (it->second != 1) os << it->second << '*';
      os << "G(" << it->first << ')';
    }
    return os.str();
  }

  friend bool operator==(const CostExpr&, const CostExpr&) = default;
};

}  // namespace hrse
