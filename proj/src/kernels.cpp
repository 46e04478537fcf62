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

#include "qfsum/kernels.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "qfsum/error.hpp"

namespace qfsum {
namespace {

constexpr const char* kNullMarker = "null";

// Flattened view of one tree's internal nodes with precomputed production
// keys; index lookups keep the memo table a flat matrix.
struct TreeIndex {
  std::vector<const ParseTree*> nodes;
  std::vector<std::string> productions;
  std::unordered_map<const ParseTree*, int> index_of;

  explicit TreeIndex(const ParseTree& root) { collect(root); }

  void collect(const ParseTree& node) {
    if (node.is_leaf()) return;
    int idx = static_cast<int>(nodes.size());
    nodes.push_back(&node);
    index_of.emplace(&node, idx);
    std::string prod = node.label;
    for (const auto& child : node.children) {
      prod.push_back('\x1f');
      prod += child.label;
      // Terminals and nonterminals with the same spelling must not collide.
      prod.push_back(child.is_leaf() ? 'T' : 'N');
    }
    productions.push_back(std::move(prod));
    for (const auto& child : node.children) collect(child);
  }
};

class PairKernel {
 public:
  PairKernel(const ParseTree& t1, const ParseTree& t2, bool semantic)
      : a_(t1), b_(t2), semantic_(semantic) {
    memo_.assign(a_.nodes.size() * b_.nodes.size(), -1.0);
  }

  double sum_all_pairs() {
    double total = 0.0;
    for (int i = 0; i < static_cast<int>(a_.nodes.size()); ++i)
      for (int j = 0; j < static_cast<int>(b_.nodes.size()); ++j) total += c(i, j);
    return total;
  }

 private:
  static bool null_preterminal(const ParseTree* n) {
    return n->is_preterminal() && n->children[0].label == kNullMarker;
  }

  double c(int i, int j) {
    double& slot = memo_[static_cast<std::size_t>(i) * b_.nodes.size() +
                         static_cast<std::size_t>(j)];
    if (slot >= 0.0) return slot;
    const ParseTree* n1 = a_.nodes[static_cast<std::size_t>(i)];
    const ParseTree* n2 = b_.nodes[static_cast<std::size_t>(j)];
    double value = 0.0;
    if (semantic_ && (null_preterminal(n1) || null_preterminal(n2))) {
      value = 0.0;
    } else if (a_.productions[static_cast<std::size_t>(i)] !=
               b_.productions[static_cast<std::size_t>(j)]) {
      value = 0.0;
    } else if (n1->is_preterminal() || n2->is_preterminal()) {
      // Equal productions force equal shapes for well-formed trees; the
      // mismatched case is defensively scored as no common fragment.
      value = (n1->is_preterminal() && n2->is_preterminal()) ? 1.0 : 0.0;
    } else {
      double prod = 1.0;
      for (std::size_t k = 0; k < n1->children.size(); ++k) {
        const ParseTree* c1 = &n1->children[k];
        const ParseTree* c2 = &n2->children[k];
        double child = 0.0;
        if (!c1->is_leaf() && !c2->is_leaf())
          child = c(a_.index_of.at(c1), b_.index_of.at(c2));
        prod *= 1.0 + child;
      }
      value = semantic_ ? prod - 1.0 : prod;
    }
    slot = value;
    return value;
  }

  TreeIndex a_;
  TreeIndex b_;
  bool semantic_;
  std::vector<double> memo_;
};

int slot_index(const std::string& label) {
  for (int i = 0; i < kSlotArity; ++i)
    if (label == kSlotLabels[i]) return i;
  if (label.rfind("ARGM", 0) == 0) return 5;
  return -1;
}

struct HeadPick {
  int rank = 5;  // noun 0, verb 1, adjective 2, adverb 3; 5 = none found
  int index = -1;
};

// Semantic head of a span: first noun, else first verb, adjective, adverb,
// else the first token.
int semantic_head(const Sentence& s, const TokenSpan& span) {
  HeadPick best;
  for (int i = span.begin; i < span.end; ++i) {
    const std::string& pos = s.tokens[static_cast<std::size_t>(i)].pos;
    int rank = 5;
    if (!pos.empty()) {
      if (pos[0] == 'N')
        rank = 0;
      else if (pos[0] == 'V')
        rank = 1;
      else if (pos[0] == 'J' || pos.rfind("ADJ", 0) == 0)
        rank = 2;
      else if (pos.rfind("RB", 0) == 0 || pos == "R" || pos == "ADV")
        rank = 3;
    }
    if (rank < best.rank) best = {rank, i};
    if (best.rank == 0) break;
  }
  return best.index >= 0 ? best.index : span.begin;
}

ParseTree head_leaf(const Sentence& s, const TokenSpan& span) {
  return ParseTree{s.tokens[static_cast<std::size_t>(semantic_head(s, span))].stem, {}};
}

int frame_extent(const RoleFrame& f) {
  int lo = f.predicate.begin;
  int hi = f.predicate.end;
  for (const auto& a : f.args) {
    lo = std::min(lo, a.span.begin);
    hi = std::max(hi, a.span.end);
  }
  return hi - lo;
}

struct StBuilder {
  const Sentence& sentence;
  const std::vector<RoleFrame>& frames;

  // Innermost other frame whose predicate lies inside `span`, skipping
  // frames already on the current nesting chain.
  int nested_candidate(const TokenSpan& span, int self, const std::set<int>& chain) const {
    int best = -1;
    int best_extent = 0;
    for (int j = 0; j < static_cast<int>(frames.size()); ++j) {
      if (j == self || chain.count(j)) continue;
      const RoleFrame& g = frames[static_cast<std::size_t>(j)];
      if (span.begin <= g.predicate.begin && g.predicate.end <= span.end) {
        int extent = frame_extent(g);
        if (best < 0 || extent < best_extent) {
          best = j;
          best_extent = extent;
        }
      }
    }
    return best;
  }

  ParseTree build(int index, std::set<int>& chain, std::set<int>& consumed) const {
    const RoleFrame& frame = frames[static_cast<std::size_t>(index)];
    std::vector<ParseTree> slot_fill(kSlotArity);
    std::vector<std::string> slot_label(kSlotArity);

    for (const RoleArg& arg : frame.args) {
      int slot = slot_index(arg.label);
      if (slot < 0) continue;
      // ARGM family: alphabetically first label wins the shared slot.
      if (!slot_label[static_cast<std::size_t>(slot)].empty()) {
        if (slot != 5 || arg.label >= slot_label[static_cast<std::size_t>(slot)]) continue;
      }
      int nested = nested_candidate(arg.span, index, chain);
      ParseTree content;
      if (nested >= 0) {
        chain.insert(nested);
        consumed.insert(nested);
        content = build(nested, chain, consumed);
        chain.erase(nested);
      } else {
        content = head_leaf(sentence, arg.span);
      }
      slot_label[static_cast<std::size_t>(slot)] = arg.label;
      slot_fill[static_cast<std::size_t>(slot)] =
          ParseTree{arg.label, {std::move(content)}};
    }
    slot_label[6] = "TARGET";
    slot_fill[6] = ParseTree{"TARGET", {head_leaf(sentence, frame.predicate)}};

    ParseTree root{"ST", {}};
    for (int i = 0; i < kSlotArity; ++i) {
      ParseTree slot{"SLOT", {}};
      if (slot_label[static_cast<std::size_t>(i)].empty())
        slot.children.push_back(ParseTree{kNullMarker, {}});
      else
        slot.children.push_back(std::move(slot_fill[static_cast<std::size_t>(i)]));
      root.children.push_back(std::move(slot));
    }
    return root;
  }
};

void check_slot_tree(const ParseTree& st) {
  bool ok = st.label == "ST" && static_cast<int>(st.children.size()) == kSlotArity;
  if (ok)
    for (const auto& slot : st.children)
      if (slot.label != "SLOT" || slot.children.size() != 1) ok = false;
  if (!ok)
    throw Error(ErrorCode::kConfig,
                "sstk operands must be SLOT-augmented trees of arity " +
                    std::to_string(kSlotArity));
}

}  // namespace

const char* const kSlotLabels[kSlotArity] = {"ARG0", "ARG1", "ARG2", "ARG3",
                                             "ARG4", "ARGM", "TARGET"};

double tree_kernel(const ParseTree& t1, const ParseTree& t2) {
  return PairKernel(t1, t2, /*semantic=*/false).sum_all_pairs();
}

double syntactic_feature(const ParseTree& sentence_tree,
                         const std::vector<ParseTree>& query_trees) {
  if (query_trees.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& q : query_trees) sum += tree_kernel(q, sentence_tree);
  return sum / static_cast<double>(query_trees.size());
}

std::vector<ParseTree> build_semantic_trees(const Sentence& sentence) {
  if (!sentence.has_frames() || sentence.role_frames->empty()) return {};

  std::vector<RoleFrame> frames;
  for (const RoleFrame& f : *sentence.role_frames)
    if (std::find(frames.begin(), frames.end(), f) == frames.end()) frames.push_back(f);

  StBuilder builder{sentence, frames};
  std::set<int> consumed;
  std::vector<std::pair<int, ParseTree>> built;
  for (int i = 0; i < static_cast<int>(frames.size()); ++i) {
    std::set<int> chain{i};
    built.emplace_back(i, builder.build(i, chain, consumed));
  }
  std::vector<ParseTree> roots;
  for (auto& [index, tree] : built)
    if (!consumed.count(index)) roots.push_back(std::move(tree));
  if (roots.empty() && !built.empty()) roots.push_back(std::move(built.front().second));
  return roots;
}

double sstk(const ParseTree& st1, const ParseTree& st2) {
  check_slot_tree(st1);
  check_slot_tree(st2);
  return PairKernel(st1, st2, /*semantic=*/true).sum_all_pairs();
}

double semantic_feature(const std::vector<ParseTree>& sentence_sts,
                        const std::vector<ParseTree>& query_sts) {
  if (sentence_sts.empty() || query_sts.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& q : query_sts) {
    double best = 0.0;
    for (const auto& s : sentence_sts) best = std::max(best, sstk(q, s));
    sum += best;
  }
  return sum / static_cast<double>(query_sts.size());
}

}  // namespace qfsum
