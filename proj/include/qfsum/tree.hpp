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

#ifndef QFSUM_TREE_HPP_
#define QFSUM_TREE_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace qfsum {

/// Labeled ordered tree. A leaf has no children; a pre-terminal has exactly
/// one child which is a leaf. Used both for constituency parses and for
/// SLOT-augmented semantic trees.
struct ParseTree {
  std::string label;
  std::vector<ParseTree> children;

  bool is_leaf() const { return children.empty(); }
  bool is_preterminal() const { return children.size() == 1 && children[0].is_leaf(); }

  // Number of nodes including leaves.
  std::size_t node_count() const;

  // Parenthesized form: (S (NP (DT the) (NN press))).
  std::string to_string() const;

  bool operator==(const ParseTree& other) const = default;
};

// Parses one Penn-style bracketed tree: `(S (NP (DT the) (NN press)))`.
// Throws qfsum::Error(kParse) on malformed input.
ParseTree parse_bracketed_tree(std::string_view text);

// Pre-terminal labels in left-to-right leaf order; used as the
// part-of-speech sequence for the sentence the tree spans.
std::vector<std::string> preterminal_labels(const ParseTree& tree);

// Leaf tokens in left-to-right order.
std::vector<std::string> leaf_tokens(const ParseTree& tree);

}  // namespace qfsum

#endif  // QFSUM_TREE_HPP_
