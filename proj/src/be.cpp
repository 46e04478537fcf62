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

#include "qfsum/be.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace qfsum {
namespace {

std::string stem_lower(const std::string& word) {
  std::string lower;
  lower.reserve(word.size());
  for (unsigned char c : word) lower.push_back(static_cast<char>(std::tolower(c)));
  return porter_stem(lower);
}

// One term of Dunning's G^2: k * ln(k * N / (row * col)), 0 when k is 0.
double g2_term(double k, double row, double col, double n) {
  if (k <= 0.0 || row <= 0.0 || col <= 0.0) return 0.0;
  return k * std::log(k * n / (row * col));
}

}  // namespace

std::vector<BasicElement> extract_bes(const Sentence& sentence, const StopwordSet& stopwords) {
  std::vector<BasicElement> bes;
  if (!sentence.has_deps()) return bes;
  std::vector<std::string> head_order;
  for (const DepTriple& triple : *sentence.dep_triples) {
    std::string head = stem_lower(triple.head);
    if (stopwords.contains(head)) continue;
    bes.push_back(BasicElement{head, stem_lower(triple.modifier), triple.relation, 0.0});
    if (std::find(head_order.begin(), head_order.end(), head) == head_order.end())
      head_order.push_back(head);
  }
  for (auto& head : head_order) bes.push_back(BasicElement{std::move(head), "", "", 0.0});
  return bes;
}

std::vector<BasicElement> rank_bes(std::vector<BasicElement> cluster_bes) {
  std::unordered_map<std::string, double> head_count;
  std::unordered_map<std::string, double> mod_count;
  std::map<std::pair<std::string, std::string>, double> pair_count;
  double n = 0.0;
  for (const BasicElement& be : cluster_bes) {
    if (be.single_item()) continue;
    head_count[be.head] += 1.0;
    mod_count[be.modifier] += 1.0;
    pair_count[{be.head, be.modifier}] += 1.0;
    n += 1.0;
  }

  for (BasicElement& be : cluster_bes) {
    if (be.single_item()) {
      be.lr_score = n > 0.0 ? head_count[be.head] / n : 0.0;
      continue;
    }
    // 2x2 contingency of head vs modifier occurrence over triple instances.
    double k11 = pair_count[{be.head, be.modifier}];
    double k12 = head_count[be.head] - k11;
    double k21 = mod_count[be.modifier] - k11;
    double k22 = n - k11 - k12 - k21;
    double r1 = k11 + k12, r2 = k21 + k22;
    double c1 = k11 + k21, c2 = k12 + k22;
    be.lr_score = 2.0 * (g2_term(k11, r1, c1, n) + g2_term(k12, r1, c2, n) +
                         g2_term(k21, r2, c1, n) + g2_term(k22, r2, c2, n));
  }

  std::sort(cluster_bes.begin(), cluster_bes.end(),
            [](const BasicElement& a, const BasicElement& b) {
              if (a.lr_score != b.lr_score) return a.lr_score > b.lr_score;
              return a.key() < b.key();
            });
  return cluster_bes;
}

BeScoreTable::BeScoreTable(const std::vector<BasicElement>& ranked) {
  for (const BasicElement& be : ranked) scores_.emplace(be.key(), be.lr_score);
}

double BeScoreTable::score(const BasicElement& be) const {
  auto it = scores_.find(be.key());
  return it == scores_.end() ? 0.0 : it->second;
}

double sentence_be_score(const std::vector<BasicElement>& sentence_bes,
                         const BeScoreTable& scores,
                         const std::set<std::string>& query_match_words) {
  std::set<BeKey> distinct = be_key_set(sentence_bes);
  if (distinct.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& key : distinct) {
    const auto& [head, modifier, relation] = key;
    bool related = query_match_words.count(head) > 0 ||
                   (!modifier.empty() && query_match_words.count(modifier) > 0);
    if (!related) continue;
    BasicElement probe{head, modifier, relation, 0.0};
    sum += scores.score(probe);
  }
  return sum / static_cast<double>(distinct.size());
}

std::set<BeKey> be_key_set(const std::vector<BasicElement>& bes) {
  std::set<BeKey> keys;
  for (const BasicElement& be : bes) keys.insert(BeKey{be.head, be.modifier, be.relation});
  return keys;
}

double be_overlap_ratio(const std::vector<BasicElement>& candidate_bes,
                        const std::set<BeKey>& summary_bes) {
  std::set<BeKey> candidate = be_key_set(candidate_bes);
  if (candidate.empty()) return 0.0;
  std::size_t shared = 0;
  for (const auto& key : candidate)
    if (summary_bes.count(key)) shared++;
  return static_cast<double>(shared) / static_cast<double>(candidate.size());
}

}  // namespace qfsum
