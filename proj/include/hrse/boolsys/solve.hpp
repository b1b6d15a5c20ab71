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

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "hrse/boolsys/anf.hpp"

namespace hrse::boolsys {

class VariableCountTooLarge : public Error {
 public:
  explicit VariableCountTooLarge(std::size_t n)
      : Error("brute force over " + std::to_string(n) + " variables exceeds the limit of 25") {}
};

class GenerationFailed : public Error {
 public:
  using Error::Error;
};

inline constexpr std::size_t kMaxBruteForceVariables = 25;

namespace detail {

// Low six variables as bit patterns over a 64-assignment block.
inline constexpr std::array<std::uint64_t, 6> kLanePatterns = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

/// Bit j set iff assignment base+j satisfies every equation.
inline std::uint64_t satisfied_lanes(const BooleanSystem& s, Assignment base, std::uint64_t live) {
  for (const auto& p : s.equations) {
    std::uint64_t value = 0;
    for (const auto& m : p.terms()) {
      std::uint64_t lanes = ~std::uint64_t{0};
      for (std::uint64_t v = m.vars; v && lanes; v &= v - 1) {
        const int i = std::countr_zero(v);
        lanes &= i < 6 ? kLanePatterns[static_cast<std::size_t>(i)] : ((base >> i) & 1 ? ~std::uint64_t{0} : 0);
      }
      value ^= lanes;
    }
    live &= ~value;
    if (!live) break;
  }
  return live;
}

}  // namespace detail

/**
 * Satisfying assignments in ascending order, stopping after cap+1 are found
 * so callers can tell "exactly cap" from "more than cap".
 */
inline std::vector<Assignment> solutions(const BooleanSystem& s, std::size_t cap = SIZE_MAX - 1) {
  if (s.n > kMaxBruteForceVariables) throw VariableCountTooLarge(s.n);
  std::vector<Assignment> out;
  const Assignment total = Assignment{1} << s.n;
  const std::uint64_t first_mask = total >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << total) - 1;
  for (Assignment base = 0; base < total; base += 64) {
    std::uint64_t hit = detail::satisfied_lanes(s, base, first_mask);
    for (; hit; hit &= hit - 1) {
      out.push_back(base + static_cast<Assignment>(std::countr_zero(hit)));
      if (out.size() > cap) return out;
    }
  }
  return out;
}

struct GenerateOptions {
  /// Resample until the planted assignment is the only solution.
  bool require_unique = true;
  /// Uniqueness checks above 20 variables take seconds each.
  bool allow_large = false;
  std::size_t max_attempts = 200;
};

struct GeneratedSystem {
  BooleanSystem system;
  Assignment planted = 0;
  std::size_t attempts = 0;
};

/**
 * Random quadratic system with a planted solution. Each pair x_i x_j appears
 * with probability about 1/n, each linear term with probability 1/2, and the
 * constant is chosen so the planted assignment satisfies the equation.
 * Only raw mt19937_64 output is used, so results are identical everywhere.
 */
inline GeneratedSystem generate(std::size_t n, std::size_t eq_count, std::uint64_t seed,
                                const GenerateOptions& opt = {}) {
  if (n < 1 || n > kMaxVariables) throw InvalidArgument("variable count must be in [1, 64]");
  if (eq_count < 1) throw InvalidArgument("eq_count must be at least 1");
  if (opt.require_unique && n > 20 && !opt.allow_large) {
    throw InvalidArgument("unique generation above 20 variables needs allow_large");
  }
  if (opt.require_unique && n > kMaxBruteForceVariables) throw VariableCountTooLarge(n);
  std::mt19937_64 rng(seed);
  const Assignment mask = n == 64 ? ~Assignment{0} : (Assignment{1} << n) - 1;
  for (std::size_t attempt = 1; attempt <= opt.max_attempts; ++attempt) {
    GeneratedSystem g;
    g.attempts = attempt;
    g.planted = rng() & mask;
    g.system.n = n;
    while (g.system.equations.size() < eq_count) {
      std::vector<Monomial> terms;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (rng() % n == 0) terms.push_back(Monomial::of({i, j}));
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (rng() & 1) terms.push_back(Monomial::var(i));
      }
      if (terms.empty()) continue;
      AnfPoly p = AnfPoly::from_terms(terms);
      if (p.eval(g.planted)) {
        terms.push_back(Monomial::one());
        p = AnfPoly::from_terms(std::move(terms));
      }
      g.system.equations.push_back(std::move(p));
    }
    if (!opt.require_unique) return g;
    const auto sols = solutions(g.system, 1);
    if (sols.size() == 1 && sols.front() == g.planted) return g;
  }
  throw GenerationFailed("no uniquely solvable system with " + std::to_string(eq_count) + " equations in " +
                         std::to_string(n) + " variables after " + std::to_string(opt.max_attempts) +
                         " attempts");
}

}  // namespace hrse::boolsys
