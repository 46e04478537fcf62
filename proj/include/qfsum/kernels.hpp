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

#ifndef QFSUM_KERNELS_HPP_
#define QFSUM_KERNELS_HPP_

#include <string>
#include <vector>

#include "qfsum/corpus.hpp"
#include "qfsum/tree.hpp"

namespace qfsum {

// Convolution tree kernel (Collins-Duffy): the number of tree fragments
// common to t1 and t2, counted with multiplicity. A fragment keeps, for each
// of its nodes, all of the node's children or none of them, and contains at
// least one production. Computed by the node-pair recursion
//
//   C(n1, n2) = 0                                 if productions differ
//   C(n1, n2) = 1                                 if both are pre-terminals
//   C(n1, n2) = prod_j (1 + C(ch(n1,j), ch(n2,j)))  otherwise
//
// summed over all node pairs, memoized per pair. Integer-valued.
double tree_kernel(const ParseTree& t1, const ParseTree& t2);

// Mean of tree_kernel(q, sentence_tree) over the query sentences' trees.
double syntactic_feature(const ParseTree& sentence_tree,
                         const std::vector<ParseTree>& query_trees);

// Slot layout of a SLOT-augmented semantic tree: ARG0..ARG4, one slot for
// the ARGM-* family, TARGET. Every semantic tree in a run uses this arity.
inline constexpr int kSlotArity = 7;

extern const char* const kSlotLabels[kSlotArity];  // core label per slot

// Builds one SLOT-augmented semantic tree per role frame of the sentence.
// Arguments are reduced to their semantic head, chosen by part-of-speech
// priority noun > verb > adjective > adverb, defaulting to the span's first
// token; the leaf carries the head's stem. An argument span that contains
// another frame's predicate nests that frame's tree in the slot (an STN);
// when several frames qualify the innermost (smallest extent) is taken.
// Frames consumed by nesting are not emitted as separate roots. Duplicate
// frames are dropped. Sentences without frames yield an empty list.
std::vector<ParseTree> build_semantic_trees(const Sentence& sentence);

// Shallow semantic tree kernel over two SLOT-augmented trees. Same node-pair
// summation as tree_kernel with two changes: a pre-terminal whose child is
// `null` contributes 0 against anything, and the product case subtracts one,
// which lets fragments keep any nonempty subset of matching slots.
// Throws qfsum::Error(kConfig) on slot-arity mismatch.
double sstk(const ParseTree& st1, const ParseTree& st2);

// For each query semantic tree, the best sstk against the sentence's trees;
// the feature is the mean of those maxima. Zero when either side is empty.
double semantic_feature(const std::vector<ParseTree>& sentence_sts,
                        const std::vector<ParseTree>& query_sts);

}  // namespace qfsum

#endif  // QFSUM_KERNELS_HPP_
