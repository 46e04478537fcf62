// Copyright 2026 The QFSum Authors.
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

#include "qfsum/tree.hpp"

#include <cctype>

#include "qfsum/error.hpp"

namespace qfsum {
namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) pos++;
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  std::string read_atom() {
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')')
      pos++;
    if (pos == start) throw Error(ErrorCode::kParse, "expected symbol in bracketed tree");
    return std::string(text.substr(start, pos - start));
  }
};

ParseTree parse_node(Cursor& cur) {
  cur.skip_ws();
  if (cur.done()) throw Error(ErrorCode::kParse, "unexpected end of bracketed tree");
  if (cur.peek() != '(') {
    // bare token = leaf
    return ParseTree{cur.read_atom(), {}};
  }
  cur.pos++;  // consume '('
  cur.skip_ws();
  ParseTree node;
  if (!cur.done() && cur.peek() != '(' && cur.peek() != ')') node.label = cur.read_atom();
  cur.skip_ws();
  while (!cur.done() && cur.peek() != ')') {
    node.children.push_back(parse_node(cur));
    cur.skip_ws();
  }
  if (cur.done()) throw Error(ErrorCode::kParse, "unbalanced '(' in bracketed tree");
  cur.pos++;  // consume ')'
  if (node.children.empty())
    throw Error(ErrorCode::kParse, "bracketed node '" + node.label + "' has no children");
  return node;
}

void collect_preterminals(const ParseTree& t, std::vector<std::string>& out) {
  if (t.is_preterminal()) {
    out.push_back(t.label);
    return;
  }
  for (const auto& c : t.children) collect_preterminals(c, out);
}

void collect_leaves(const ParseTree& t, std::vector<std::string>& out) {
  if (t.is_leaf()) {
    out.push_back(t.label);
    return;
  }
  for (const auto& c : t.children) collect_leaves(c, out);
}

}  // namespace

std::size_t ParseTree::node_count() const {
  std::size_t n = 1;
  for (const auto& c : children) n += c.node_count();
  return n;
}

std::string ParseTree::to_string() const {
  if (is_leaf()) return label;
  std::string s = "(" + label;
  for (const auto& c : children) {
    s += ' ';
    s += c.to_string();
  }
  s += ')';
  return s;
}

ParseTree parse_bracketed_tree(std::string_view text) {
  Cursor cur{text};
  cur.skip_ws();
  ParseTree root = parse_node(cur);
  cur.skip_ws();
  if (!cur.done()) throw Error(ErrorCode::kParse, "trailing content after bracketed tree");
  if (root.is_leaf()) throw Error(ErrorCode::kParse, "bracketed tree is a bare token");
  // Collapse conventional outer wrapper `( (S ...) )` emitted by some parsers.
  if (root.label.empty() && root.children.size() == 1) root = root.children[0];
  return root;
}

std::vector<std::string> preterminal_labels(const ParseTree& tree) {
  std::vector<std::string> out;
  collect_preterminals(tree, out);
  return out;
}

std::vector<std::string> leaf_tokens(const ParseTree& tree) {
  std::vector<std::string> out;
  collect_leaves(tree, out);
  return out;
}

}  // namespace qfsum
