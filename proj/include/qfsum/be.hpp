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

#ifndef QFSUM_BE_HPP_
#define QFSUM_BE_HPP_

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "qfsum/corpus.hpp"
#include "qfsum/text.hpp"

namespace qfsum {

/// Basic Element: a content head word alone (single-item BE, empty modifier
/// and relation) or a (head|modifier|relation) dependency triple whose head
/// is a content word. Heads and modifiers are stored stemmed.
struct BasicElement {
  std::string head;
  std::string modifier;
  std::string relation;
  double lr_score = 0.0;

  bool single_item() const { return modifier.empty() && relation.empty(); }
  auto key() const { return std::tie(head, modifier, relation); }
};

using BeKey = std::tuple<std::string, std::string, std::string>;

// One triple-BE per dependency triple with a content head (in triple order),
// then one single-item BE per distinct content head (first-appearance
// order). Sentences without dependency triples yield an empty list.
std::vector<BasicElement> extract_bes(const Sentence& sentence, const StopwordSet& stopwords);

// Scores every BE of the pooled cluster list and returns it sorted by score
// descending, ties by (head, modifier, relation). Triple BEs carry the
// Dunning log-likelihood-ratio statistic G^2 of their head/modifier
// co-occurrence over the cluster's triple instances; single-item BEs carry
// the head's frequency ratio among triple heads.
std::vector<BasicElement> rank_bes(std::vector<BasicElement> cluster_bes);

/// Score lookup by BE identity, built from a ranked list.
class BeScoreTable {
 public:
  BeScoreTable() = default;
  explicit BeScoreTable(const std::vector<BasicElement>& ranked);

  double score(const BasicElement& be) const;

 private:
  std::map<BeKey, double> scores_;
};

// Sum of the scores of the sentence's distinct BEs that contain a query or
// query-related word (in head or modifier), divided by the sentence's
// distinct BE count. No top-k threshold is applied.
double sentence_be_score(const std::vector<BasicElement>& sentence_bes,
                         const BeScoreTable& scores,
                         const std::set<std::string>& query_match_words);

std::set<BeKey> be_key_set(const std::vector<BasicElement>& bes);

// |candidate BEs present in the summary union| / |candidate BEs|, over
// distinct identities. A candidate without BEs gets ratio 0 (admitted).
double be_overlap_ratio(const std::vector<BasicElement>& candidate_bes,
                        const std::set<BeKey>& summary_bes);

}  // namespace qfsum

#endif  // QFSUM_BE_HPP_
