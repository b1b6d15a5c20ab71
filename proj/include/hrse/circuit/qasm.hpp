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
#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hrse/circuit/circuit.hpp"
#include "hrse/core/error.hpp"

namespace hrse::circuit {

// OpenQASM 2 subset:
//
//   OPENQASM 2.0;
//   qreg q[N];
//   x q[0];
//   ccx q[0],q[1],q[2];
//   mcx q[0],q[1],q[2],q[3];   (extension: controls..., target)
//   mcz q[0],q[1],q[2];        (extension)
//
// One statement per line, LF line ends, `//` comments.

inline std::string emit_text(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\n" << "qreg q[" << c.width() << "];\n";
  for (const auto& g : c.gates()) {
    os << to_string(g.kind) << ' ';
    for (Qubit q : g.controls) os << "q[" << q << "],";
    os << "q[" << g.target << "];\n";
  }
  return os.str();
}

namespace detail {

struct Statement {
  std::string text;
  std::size_t line;
  std::size_t column;
};

// Splits on ';' with comments removed; reports the position of each
// statement's first non-blank character.
inline std::vector<Statement> split_statements(std::string_view text, bool& trailing) {
  std::vector<Statement> out;
  std::string cur;
  std::size_t line = 1, col = 1, start_line = 1, start_col = 1;
  bool started = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
      if (i < text.size()) {
        ++line;
        col = 1;
        cur += ' ';
      }
      continue;
    }
    if (ch == ';') {
      out.push_back({cur, start_line, start_col});
      cur.clear();
      started = false;
    } else {
      if (!started && !std::isspace(static_cast<unsigned char>(ch))) {
        started = true;
        start_line = line;
        start_col = col;
      }
      cur += ch;
    }
    if (ch == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  trailing = started;
  if (started) out.push_back({cur, start_line, start_col});
  return out;
}

inline std::string strip(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

inline std::vector<std::string> split_operands(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(strip(cur));
  return out;
}

// Parses `name[index]` and returns index.
inline std::size_t parse_ref(const std::string& ref, const std::string& reg, const Statement& st) {
  const auto open = ref.find('[');
  const auto close = ref.find(']');
  if (open == std::string::npos || close == std::string::npos || close < open || close + 1 != ref.size() ||
      strip(ref.substr(0, open)) != reg) {
    throw ParseError(st.line, st.column, "expected " + reg + "[index], got '" + ref + "'");
  }
  const std::string digits = strip(ref.substr(open + 1, close - open - 1));
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError(st.line, st.column, "bad index in '" + ref + "'");
  }
  return std::stoul(digits);
}

}  // namespace detail

/** Parses the subset emitted by emit_text. Errors carry line numbers. */
inline Circuit parse_text(std::string_view text) {
  bool trailing = false;
  const auto stmts = detail::split_statements(text, trailing);
  if (trailing) {
    const auto& last = stmts.back();
    throw ParseError(last.line, last.column, "statement is missing ';'");
  }
  std::size_t i = 0;
  auto next_nonempty = [&]() -> const detail::Statement* {
    while (i < stmts.size() && detail::strip(stmts[i].text).empty()) ++i;
    return i < stmts.size() ? &stmts[i++] : nullptr;
  };
  const auto* header = next_nonempty();
  if (!header || detail::strip(header->text) != "OPENQASM 2.0") {
    throw ParseError(header ? header->line : 1, header ? header->column : 1, "expected 'OPENQASM 2.0;'");
  }
  const auto* qreg = next_nonempty();
  if (!qreg) throw ParseError(header->line, 1, "expected 'qreg q[N];'");
  const std::string qreg_text = detail::strip(qreg->text);
  if (qreg_text.rfind("qreg", 0) != 0) throw ParseError(qreg->line, qreg->column, "expected 'qreg q[N];'");
  const std::size_t width = detail::parse_ref(detail::strip(qreg_text.substr(4)), "q", *qreg);

  Circuit c(width);
  while (const auto* st = next_nonempty()) {
    const std::string body = detail::strip(st->text);
    std::size_t name_end = 0;
    while (name_end < body.size() && std::isalpha(static_cast<unsigned char>(body[name_end]))) ++name_end;
    const std::string name = body.substr(0, name_end);
    const auto refs = detail::split_operands(body.substr(name_end));
    std::vector<Qubit> qs;
    for (const auto& r : refs) {
      const std::size_t q = detail::parse_ref(r, "q", *st);
      if (q >= width) {
        throw ParseError(st->line, st->column,
                         "qubit index " + std::to_string(q) + " out of range for qreg q[" + std::to_string(width) + "]");
      }
      qs.push_back(static_cast<Qubit>(q));
    }
    const Qubit target = qs.back();
    std::vector<Qubit> controls(qs.begin(), qs.end() - 1);
    Gate g;
    if (name == "x") g = {GateKind::X, controls, target};
    else if (name == "h") g = {GateKind::H, controls, target};
    else if (name == "z") g = {GateKind::Z, controls, target};
    else if (name == "cx") g = {GateKind::CX, controls, target};
    else if (name == "ccx") g = {GateKind::CCX, controls, target};
    else if (name == "mcx") g = {GateKind::MCX, controls, target};
    else if (name == "mcz") g = {GateKind::MCZ, controls, target};
    else throw ParseError(st->line, st->column, "unknown gate '" + name + "'");
    try {
      c.add(std::move(g));
    } catch (const InvalidGate& e) {
      throw ParseError(st->line, st->column, e.what());
    }
  }
  return c;
}

}  // namespace hrse::circuit
