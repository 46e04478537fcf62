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

#ifndef QFSUM_LEXICON_HPP_
#define QFSUM_LEXICON_HPP_

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qfsum {

/// One lexicon record. Synonyms are first-sense synonyms; hypernyms are
/// restricted to two levels and hyponyms to three by the file producer;
/// gloss holds the content words of the gloss definition.
struct LexEntry {
  std::string pos;  // "n", "v", "a", "r" or empty when unknown
  std::vector<std::string> synonyms;
  std::vector<std::string> hypernyms;
  std::vector<std::string> hyponyms;
  std::vector<std::string> gloss;

  bool is_noun() const { return !pos.empty() && pos[0] == 'n'; }
  bool empty() const {
    return synonyms.empty() && hypernyms.empty() && hyponyms.empty() && gloss.empty();
  }
};

/// Word expansion table. Lookups for absent words return a shared empty
/// entry; they never fail. Keys are the surface forms from the lexicon file
/// (lowercased on load); lookup() falls back to the stemmed form so that
/// stemmed pipelines still hit entries keyed on full words.
class Lexicon {
 public:
  Lexicon() = default;

  // JSON lines: {"word":..., "pos":..., "synonyms":[], "hypernyms":[],
  // "hyponyms":[], "gloss":[]}. All fields but "word" optional.
  static Lexicon load_jsonl(const std::string& path);

  void add(const std::string& word, LexEntry entry);

  // Exact lowercase lookup, then a retry on the stem of `word`.
  const LexEntry& lookup(std::string_view word) const;

  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, LexEntry> entries_;
};

/// Distributional thesaurus: per word, a list of sense clusters, each a list
/// of (member word, similarity weight) pairs. Member words are stored
/// stemmed; weights are kept for inspection but do not enter the overlap
/// scores.
class Thesaurus {
 public:
  struct Member {
    std::string word;
    double score = 0.0;
  };
  using SenseCluster = std::vector<Member>;

  Thesaurus() = default;

  // JSON lines: {"word":..., "clusters": [[{"w":..., "score":...}, ...], ...]}
  static Thesaurus load_jsonl(const std::string& path);

  void add(const std::string& word, std::vector<SenseCluster> clusters);

  const std::vector<SenseCluster>* clusters_for(std::string_view word) const;

  bool empty() const { return entries_.empty(); }

 private:
  std::unordered_map<std::string, std::vector<SenseCluster>> entries_;
};

}  // namespace qfsum

#endif  // QFSUM_LEXICON_HPP_
