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

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hrse/core/error.hpp"
#include "hrse/core/tree.hpp"
#include "hrse/core/validate.hpp"

namespace hrse {

// Tree text format (docs/formats.md):
//
//   hrse-tree v1
//   node id=0 size=5 {
//     node id=1 size=4
//     node id=2 size=3
//   }
//
// Two-space indentation per depth, one node per line, LF line ends. The
// parser is whitespace-insensitive and skips `#` comments. Evaluation
// annotations (cost, leaves) are not stored.

inline std::string serialize(const HrseTree& tree) {
  std::ostringstream os;
  os << "hrse-tree v1\n";
  struct Frame {
    NodeId node;
    std::size_t next_child;
  };
  std::vector<Frame> stack{{tree.root(), 0}};
  auto open = [&](NodeId v) {
    os << std::string(2 * static_cast<std::size_t>(tree.depth(v)), ' ') << "node id=" << v
       << " size=" << tree.size(v);
    os << (tree.is_leaf(v) ? "\n" : " {\n");
  };
  open(tree.root());
  while (!stack.empty()) {
    auto& top = stack.back();
    const auto children = tree.children(top.node);
    if (top.next_child < children.size()) {
      const NodeId c = children[top.next_child++];
      open(c);
      if (!tree.is_leaf(c)) stack.push_back({c, 0});
    } else {
      if (!children.empty()) {
        os << std::string(2 * static_cast<std::size_t>(tree.depth(top.node)), ' ') << "}\n";
      }
      stack.pop_back();
    }
  }
  return os.str();
}

struct DeserializeOptions {
  bool validate = true;
  ValidateOptions validate_options;
};

namespace detail {

struct TreeToken {
  std::string text;
  std::size_t line;
  std::size_t column;
};

inline std::vector<TreeToken> tokenize_tree(std::string_view text) {
  std::vector<TreeToken> out;
  std::size_t line = 1, col = 1, i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      ++col;
      ++i;
    } else if (ch == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (ch == '{' || ch == '}') {
      out.push_back({std::string(1, ch), line, col});
      ++col;
      ++i;
    } else {
      const std::size_t start = i, start_col = col;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
             text[i] != '{' && text[i] != '}' && text[i] != '#') {
        ++i;
        ++col;
      }
      out.push_back({std::string(text.substr(start, i - start)), line, start_col});
    }
  }
  return out;
}

inline long parse_field(const TreeToken& tok, std::string_view key) {
  const std::string prefix = std::string(key) + "=";
  if (tok.text.rfind(prefix, 0) != 0) {
    throw ParseError(tok.line, tok.column, "expected '" + prefix + "<int>', got '" + tok.text + "'");
  }
  const std::string digits = tok.text.substr(prefix.size());
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(digits, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (digits.empty() || used != digits.size()) {
    throw ParseError(tok.line, tok.column, "bad integer in '" + tok.text + "'");
  }
  return value;
}

}  // namespace detail

/**
 * Parses the tree text format. Throws ParseError for syntax problems,
 * StructuralError for a second root or bad ids (ids must be exactly
 * 0..N-1), and ValidationError when validation is requested and fails.
 */
inline HrseTree deserialize(std::string_view text, DeserializeOptions opts = {}) {
  const auto toks = detail::tokenize_tree(text);
  std::size_t pos = 0;
  auto at_end = [&] { return pos >= toks.size(); };
  auto expect = [&](std::string_view what) -> const detail::TreeToken& {
    if (at_end()) {
      const std::size_t line = toks.empty() ? 1 : toks.back().line;
      throw ParseError(line, 1, "unexpected end of input, expected '" + std::string(what) + "'");
    }
    const auto& t = toks[pos++];
    if (t.text != what) {
      throw ParseError(t.line, t.column, "expected '" + std::string(what) + "', got '" + t.text + "'");
    }
    return t;
  };

  expect("hrse-tree");
  expect("v1");

  std::vector<long> ids;
  std::vector<int> sizes;
  std::vector<std::optional<std::size_t>> parent_slot;
  // Stack of slots (indices into ids) whose child list is open.
  std::vector<std::size_t> open;
  bool root_done = false;
  while (!at_end()) {
    const auto& t = toks[pos];
    if (t.text == "}") {
      if (open.empty()) throw ParseError(t.line, t.column, "unbalanced '}'");
      open.pop_back();
      ++pos;
      if (open.empty()) root_done = true;
      continue;
    }
    if (t.text != "node") throw ParseError(t.line, t.column, "expected 'node', got '" + t.text + "'");
    if (root_done || (open.empty() && !ids.empty())) {
      throw StructuralError(
          "line " + std::to_string(t.line) + ": multiple roots (a second top-level node)");
    }
    ++pos;
    if (at_end()) throw ParseError(t.line, t.column, "truncated node");
    const long id = detail::parse_field(toks[pos++], "id");
    if (at_end()) throw ParseError(t.line, t.column, "truncated node");
    const long size = detail::parse_field(toks[pos++], "size");
    ids.push_back(id);
    sizes.push_back(static_cast<int>(size));
    parent_slot.push_back(open.empty() ? std::nullopt : std::optional<std::size_t>(open.back()));
    if (!at_end() && toks[pos].text == "{") {
      ++pos;
      open.push_back(ids.size() - 1);
    } else if (open.empty()) {
      root_done = true;
    }
  }
  if (!open.empty()) {
    throw ParseError(toks.back().line, toks.back().column, "missing '}'");
  }
  if (ids.empty()) throw StructuralError("tree has no nodes");

  const std::size_t n = ids.size();
  std::vector<int> by_id_size(n);
  std::vector<std::optional<NodeId>> by_id_parent(n);
  std::vector<NodeId> order;
  std::vector<bool> seen(n, false);
  for (std::size_t slot = 0; slot < n; ++slot) {
    if (ids[slot] < 0 || static_cast<std::size_t>(ids[slot]) >= n || seen[ids[slot]]) {
      throw StructuralError(
          "node ids must be the distinct integers 0.." + std::to_string(n - 1) + " (bad id " +
          std::to_string(ids[slot]) + ")");
    }
    seen[ids[slot]] = true;
  }
  for (std::size_t slot = 0; slot < n; ++slot) {
    const auto id = static_cast<NodeId>(ids[slot]);
    by_id_size[id] = sizes[slot];
    if (parent_slot[slot]) by_id_parent[id] = static_cast<NodeId>(ids[*parent_slot[slot]]);
    order.push_back(id);
  }
  HrseTree tree = HrseTree::from_parents(by_id_size, by_id_parent, order);
  if (opts.validate) {
    auto report = validate(tree, opts.validate_options);
    if (!report.ok()) throw ValidationError(std::move(report));
  }
  return tree;
}

/** Graphviz rendering; labels show size, depth and out-degree. */
inline std::string export_dot(const HrseTree& tree) {
  std::ostringstream os;
  os << "digraph hrse {\n";
  os << "  node [shape=circle];\n";
  for (NodeId v : tree.preorder()) {
    os << "  n" << v << " [label=\"s=" << tree.size(v) << "\\nd=" << tree.depth(v)
       << "\\nk=" << tree.out_degree(v) << "\"];\n";
  }
  for (NodeId v : tree.preorder()) {
    for (NodeId c : tree.children(v)) os << "  n" << v << " -> n" << c << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace hrse
