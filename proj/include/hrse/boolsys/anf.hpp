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
#include <bit>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hrse/core/error.hpp"

namespace hrse::boolsys {

/// Bit i holds variable x_{i+1}.
using Assignment = std::uint64_t;

inline constexpr std::size_t kMaxVariables = 64;

/** AND of the variables in `vars`; the empty monomial is the constant 1. */
struct Monomial {
  std::uint64_t vars = 0;

  static Monomial one() { return {}; }
  static Monomial var(std::size_t i) { return {std::uint64_t{1} << i}; }
  static Monomial of(std::initializer_list<std::size_t> idx) {
    Monomial m;
    for (auto i : idx) m.vars |= std::uint64_t{1} << i;
    return m;
  }

  std::size_t degree() const { return static_cast<std::size_t>(std::popcount(vars)); }
  bool eval(Assignment x) const { return (x & vars) == vars; }

  std::vector<std::size_t> variables() const {
    std::vector<std::size_t> out;
    for (std::uint64_t v = vars; v; v &= v - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(v)));
    return out;
  }

  std::string to_string() const {
    if (vars == 0) return "1";
    std::string out;
    for (auto i : variables()) {
      if (!out.empty()) out += '*';
      out += 'x' + std::to_string(i + 1);
    }
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Canonical order: higher degree first, then lexicographic on the sorted
/// variable lists.
inline bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  return a.variables() < b.variables();
}

/** XOR of distinct monomials, read as the equation p(x) = 0. */
class AnfPoly {
 public:
  AnfPoly() = default;

  /// XOR-combines `terms`: pairs of equal monomials cancel. `cancelled`
  /// receives the number of cancelled pairs.
  static AnfPoly from_terms(std::vector<Monomial> terms, std::size_t* cancelled = nullptr) {
    std::sort(terms.begin(), terms.end(), canonical_less);
    AnfPoly p;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < terms.size();) {
      std::size_t j = i;
      while (j < terms.size() && terms[j] == terms[i]) ++j;
      if ((j - i) % 2 == 1) p.terms_.push_back(terms[i]);
      pairs += (j - i) / 2;
      i = j;
    }
    if (cancelled) *cancelled = pairs;
    return p;
  }

  const std::vector<Monomial>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t degree() const { return terms_.empty() ? 0 : terms_.front().degree(); }
  bool has_constant() const { return !terms_.empty() && terms_.back().vars == 0; }

  std::uint64_t support() const {
    std::uint64_t s = 0;
    for (const auto& m : terms_) s |= m.vars;
    return s;
  }

  bool eval(Assignment x) const {
    bool v = false;
    for (const auto& m : terms_) v ^= m.eval(x);
    return v;
  }

  /// `x1*x2 + x3 + 1`; the empty polynomial prints as `0`.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& m : terms_) {
      if (!out.empty()) out += " + ";
      out += m.to_string();
    }
    return out;
  }

  friend bool operator==(const AnfPoly&, const AnfPoly&) = default;

 private:
  std::vector<Monomial> terms_;
};

inline bool eval(const AnfPoly& p, Assignment x) { return p.eval(x); }

/** Equations p_i(x) = 0 over x_1..x_n. */
struct BooleanSystem {
  std::size_t n = 0;
  std::vector<AnfPoly> equations;

  bool satisfied_by(Assignment x) const {
    return std::all_of(equations.begin(), equations.end(), [&](const AnfPoly& p) { return !p.eval(x); });
  }

  /// The first `count` equations as a system of their own.
  BooleanSystem prefix(std::size_t count) const {
    BooleanSystem s{n, {}};
    s.equations.assign(equations.begin(), equations.begin() + std::min(count, equations.size()));
    return s;
  }

  friend bool operator==(const BooleanSystem&, const BooleanSystem&) = default;
};

inline void check_system(const BooleanSystem& s) {
  if (s.n < 1 || s.n > kMaxVariables) throw InvalidArgument("variable count must be in [1, 64]");
  if (s.equations.empty()) throw InvalidArgument("system has no equations");
  const std::uint64_t allowed = s.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s.n) - 1;
  for (const auto& p : s.equations) {
    if (p.support() & ~allowed) throw InvalidArgument("equation uses a variable beyond x" + std::to_string(s.n));
  }
}

// Text format:
//
//   # comment
//   vars 3;
//   x1*x2 + x3 + 1;
//   0;
//
// One equation per statement, terminated by ';'. Whitespace is ignored.

struct ParseWarning {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;
};

namespace detail {

class AnfLexer {
 public:
  explicit AnfLexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }
  std::string word() {
    skip_space();
    std::string out;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      out += text_[pos_];
      advance();
    }
    return out;
  }
  std::size_t number() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected a number");
    std::size_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (v > 1'000'000) fail("number too large");
      advance();
    }
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, column_, what); }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0, line_ = 1, column_ = 1;
};

}  // namespace detail

/**
 * Parses the ANF text format. Duplicate monomials cancel in pairs and are
 * reported through `warnings`.
 */
inline BooleanSystem parse(std::string_view text, std::vector<ParseWarning>* warnings = nullptr) {
  detail::AnfLexer lx(text);
  if (lx.word() != "vars") lx.fail("expected 'vars n;'");
  BooleanSystem sys;
  const std::size_t n_line = lx.line(), n_col = lx.column();
  sys.n = lx.number();
  if (sys.n < 1 || sys.n > kMaxVariables) throw ParseError(n_line, n_col + 1, "variable count must be in [1, 64]");
  lx.expect(';');
  while (!lx.at_end()) {
    const std::size_t line = lx.line(), col = lx.column();
    std::vector<Monomial> terms;
    if (lx.peek() == '0') {
      if (lx.number() != 0) lx.fail("only '0' may stand alone as a constant");
    } else {
      for (;;) {
        Monomial m;
        if (lx.peek() == '1') {
          if (lx.number() != 1) lx.fail("constant term must be 1");
        } else {
          for (;;) {
            const std::size_t vl = lx.line(), vc = lx.column();
            if (lx.word() != "x") lx.fail("expected a variable like x1 or the constant 1");
            const std::size_t i = lx.number();
            if (i < 1 || i > sys.n) {
              throw ParseError(vl, vc, "variable x" + std::to_string(i) + " not declared (vars " +
                                           std::to_string(sys.n) + ")");
            }
            m.vars |= std::uint64_t{1} << (i - 1);
            if (lx.peek() != '*') break;
            lx.expect('*');
          }
        }
        terms.push_back(m);
        if (lx.peek() != '+') break;
        lx.expect('+');
      }
    }
    lx.expect(';');
    std::size_t cancelled = 0;
    sys.equations.push_back(AnfPoly::from_terms(std::move(terms), &cancelled));
    if (cancelled && warnings) {
      warnings->push_back({line, col, std::to_string(cancelled) + " duplicate monomial pair(s) cancelled"});
    }
  }
  if (sys.equations.empty()) lx.fail("system has no equations");
  return sys;
}

/** Canonical text; emit(parse(emit(s))) == emit(s). */
inline std::string emit(const BooleanSystem& s) {
  std::ostringstream os;
  os << "vars " << s.n << ";\n";
  for (const auto& p : s.equations) os << p.to_string() << ";\n";
  return os.str();
}

}  // namespace hrse::boolsys
