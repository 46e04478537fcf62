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

#include "qfsum/lexsim.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

namespace qfsum {
namespace {

double pool_max(const Pool& sentence_pool, const Pool& query_pool,
                double (*measure)(const TokenSeq&, const TokenSeq&, double, double), double p1,
                double p2) {
  double best = 0.0;
  for (const auto& s : sentence_pool)
    for (const auto& q : query_pool) best = std::max(best, measure(s, q, p1, p2));
  return best;
}

std::unordered_map<std::string, int> ngram_counts(const TokenSeq& seq, int n) {
  std::unordered_map<std::string, int> counts;
  if (static_cast<int>(seq.size()) < n) return counts;
  for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= seq.size(); ++i) {
    std::string key;
    for (int j = 0; j < n; ++j) {
      if (j) key.push_back('\x1f');
      key += seq[i + static_cast<std::size_t>(j)];
    }
    counts[key]++;
  }
  return counts;
}

// Clipped co-occurrence count between two count maps.
int clipped_matches(const std::unordered_map<std::string, int>& a,
                    const std::unordered_map<std::string, int>& b) {
  int matches = 0;
  for (const auto& [key, count] : a) {
    auto it = b.find(key);
    if (it != b.end()) matches += std::min(count, it->second);
  }
  return matches;
}

bool noun_token(const Token& token, const Lexicon& lexicon) {
  if (!token.pos.empty()) return token.pos[0] == 'N';
  return lexicon.lookup(token.surface).is_noun();
}

std::set<std::string> head_related_set(const std::set<std::string>& heads,
                                       const Lexicon& lexicon) {
  std::set<std::string> related;
  for (const auto& head : heads) {
    const LexEntry& entry = lexicon.lookup(head);
    insert_stemmed_parts(related, entry.synonyms);
    insert_stemmed_parts(related, entry.hypernyms);
    insert_stemmed_parts(related, entry.hyponyms);
  }
  return related;
}

double set_overlap(const std::set<std::string>& expansion, const std::set<std::string>& against) {
  if (expansion.empty()) return 0.0;
  std::size_t matched = 0;
  for (const auto& w : expansion)
    if (against.count(w)) matched++;
  return static_cast<double>(matched) / static_cast<double>(expansion.size());
}

}  // namespace

double ngram_overlap(const TokenSeq& sentence, const TokenSeq& query, int n) {
  if (static_cast<int>(sentence.size()) < n || static_cast<int>(query.size()) < n) return 0.0;
  auto sc = ngram_counts(sentence, n);
  auto qc = ngram_counts(query, n);
  int total = static_cast<int>(sentence.size()) - n + 1;
  return static_cast<double>(clipped_matches(sc, qc)) / static_cast<double>(total);
}

double ngram_score(const Pool& sentence_pool, const Pool& query_pool, int n) {
  double best = 0.0;
  for (const auto& s : sentence_pool)
    for (const auto& q : query_pool) best = std::max(best, ngram_overlap(s, q, n));
  return best;
}

double unigram_score(const Sentence& sentence, const std::set<std::string>& qrw) {
  int content = 0;
  int matched = 0;
  for (const Token& t : sentence.tokens) {
    if (!t.is_content) continue;
    content++;
    if (qrw.count(t.stem)) matched++;
  }
  if (content == 0) return 0.0;
  return static_cast<double>(matched) / static_cast<double>(content);
}

int lcs_length(const TokenSeq& a, const TokenSeq& b) {
  const std::size_t m = a.size(), n = b.size();
  std::vector<int> prev(n + 1, 0), cur(n + 1, 0);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (a[i - 1] == b[j - 1])
        cur[j] = prev[j - 1] + 1;
      else
        cur[j] = std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

double lcs_fmeasure(const TokenSeq& s, const TokenSeq& q, double alpha) {
  if (s.empty() || q.empty()) return 0.0;
  double lcs = lcs_length(s, q);
  double recall = lcs / static_cast<double>(s.size());
  double precision = lcs / static_cast<double>(q.size());
  return (1.0 - alpha) * precision + alpha * recall;
}

double lcs_score(const Pool& sentence_pool, const Pool& query_pool, double alpha) {
  double best = 0.0;
  for (const auto& s : sentence_pool)
    for (const auto& q : query_pool) best = std::max(best, lcs_fmeasure(s, q, alpha));
  return best;
}

double wlcs_value(const TokenSeq& a, const TokenSeq& b, double weight) {
  const std::size_t m = a.size(), n = b.size();
  // c accumulates weighted length; w tracks the run of consecutive matches
  // ending at (i, j).
  std::vector<std::vector<double>> c(m + 1, std::vector<double>(n + 1, 0.0));
  std::vector<std::vector<int>> w(m + 1, std::vector<int>(n + 1, 0));
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (a[i - 1] == b[j - 1]) {
        int k = w[i - 1][j - 1];
        c[i][j] = c[i - 1][j - 1] + std::pow(k + 1, weight) - std::pow(k, weight);
        w[i][j] = k + 1;
      } else if (c[i - 1][j] > c[i][j - 1]) {
        c[i][j] = c[i - 1][j];
      } else {
        c[i][j] = c[i][j - 1];
      }
    }
  }
  return c[m][n];
}

double wlcs_fmeasure(const TokenSeq& s, const TokenSeq& q, double weight, double alpha) {
  if (s.empty() || q.empty()) return 0.0;
  double value = wlcs_value(s, q, weight);
  double recall = std::pow(value / std::pow(static_cast<double>(s.size()), weight), 1.0 / weight);
  double precision =
      std::pow(value / std::pow(static_cast<double>(q.size()), weight), 1.0 / weight);
  return (1.0 - alpha) * precision + alpha * recall;
}

double wlcs_score(const Pool& sentence_pool, const Pool& query_pool, double weight,
                  double alpha) {
  return pool_max(
      sentence_pool, query_pool,
      [](const TokenSeq& s, const TokenSeq& q, double w, double a) {
        return wlcs_fmeasure(s, q, w, a);
      },
      weight, alpha);
}

int skip_bigram_matches(const TokenSeq& a, const TokenSeq& b, int d_skip) {
  auto pairs = [d_skip](const TokenSeq& seq) {
    std::unordered_map<std::string, int> counts;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      std::size_t limit =
          d_skip < 0 ? seq.size() : std::min(seq.size(), i + 2 + static_cast<std::size_t>(d_skip));
      for (std::size_t j = i + 1; j < limit; ++j) counts[seq[i] + '\x1f' + seq[j]]++;
    }
    return counts;
  };
  return clipped_matches(pairs(a), pairs(b));
}

long long skip_bigram_count(int length, int d_skip) {
  if (length < 2) return 0;
  if (d_skip < 0) return static_cast<long long>(length) * (length - 1) / 2;
  long long total = 0;
  for (int i = 0; i + 1 < length; ++i)
    total += std::min(d_skip + 1, length - 1 - i);
  return total;
}

double skip_bigram_fmeasure(const TokenSeq& s, const TokenSeq& q, int d_skip, double alpha) {
  long long sd = skip_bigram_count(static_cast<int>(s.size()), d_skip);
  long long qd = skip_bigram_count(static_cast<int>(q.size()), d_skip);
  if (sd == 0 || qd == 0) return 0.0;
  double matches = skip_bigram_matches(s, q, d_skip);
  double recall = matches / static_cast<double>(sd);
  double precision = matches / static_cast<double>(qd);
  return (1.0 - alpha) * precision + alpha * recall;
}

double skip_bigram_score(const Pool& sentence_pool, const Pool& query_pool, int d_skip,
                         double alpha) {
  double best = 0.0;
  for (const auto& s : sentence_pool)
    for (const auto& q : query_pool)
      best = std::max(best, skip_bigram_fmeasure(s, q, d_skip, alpha));
  return best;
}

std::set<std::string> head_set(const Sentence& sentence, const StopwordSet& stopwords) {
  std::set<std::string> heads;
  if (!sentence.has_deps()) return heads;
  for (const DepTriple& triple : *sentence.dep_triples) {
    std::string lower;
    lower.reserve(triple.head.size());
    for (unsigned char c : triple.head) lower.push_back(static_cast<char>(std::tolower(c)));
    std::string stem = porter_stem(lower);
    if (!stopwords.contains(stem)) heads.insert(std::move(stem));
  }
  return heads;
}

HeadScores head_scores(const std::set<std::string>& sentence_heads,
                       const std::set<std::string>& query_heads, const Lexicon& lexicon) {
  HeadScores scores;
  scores.exact = set_overlap(sentence_heads, query_heads);
  scores.related =
      set_overlap(head_related_set(sentence_heads, lexicon), head_related_set(query_heads, lexicon));
  return scores;
}

double lexsem_overlap(LexsemKind kind, const Sentence& sentence,
                      const std::set<std::string>& qrw, const Lexicon& lexicon) {
  std::set<std::string> expansion;
  for (const Token& token : sentence.tokens) {
    if (!token.is_content) continue;
    const LexEntry& entry = lexicon.lookup(token.surface);
    switch (kind) {
      case LexsemKind::kSynonym:
        insert_stemmed_parts(expansion, entry.synonyms);
        break;
      case LexsemKind::kHypernymHyponym:
        if (noun_token(token, lexicon)) {
          insert_stemmed_parts(expansion, entry.hypernyms);
          insert_stemmed_parts(expansion, entry.hyponyms);
        }
        break;
      case LexsemKind::kGloss:
        if (noun_token(token, lexicon)) insert_stemmed_parts(expansion, entry.gloss);
        break;
    }
  }
  return set_overlap(expansion, qrw);
}

std::set<std::string> choose_thesaurus_bag(const std::vector<Sentence>& query,
                                           const std::set<std::string>& qrw,
                                           const Thesaurus& thesaurus) {
  std::set<std::string> bag;
  for (const Sentence& sentence : query) {
    for (const Token& token : sentence.tokens) {
      if (!token.is_content) continue;
      const auto* clusters = thesaurus.clusters_for(token.surface);
      if (!clusters || clusters->empty()) continue;
      // Pick the sense cluster sharing the most words with the
      // query-related set; first cluster wins ties.
      std::size_t best_index = 0;
      std::size_t best_matches = 0;
      bool first = true;
      for (std::size_t i = 0; i < clusters->size(); ++i) {
        std::set<std::string> members;
        for (const auto& m : (*clusters)[i]) members.insert(m.word);
        std::size_t matches = 0;
        for (const auto& w : members)
          if (qrw.count(w)) matches++;
        if (first || matches > best_matches) {
          best_index = i;
          best_matches = matches;
          first = false;
        }
      }
      for (const auto& m : (*clusters)[best_index]) bag.insert(m.word);
    }
  }
  return bag;
}

double thesaurus_similarity(const Sentence& sentence, const std::set<std::string>& bag) {
  std::set<std::string> words;
  for (const Token& t : sentence.tokens) words.insert(t.stem);
  return set_overlap(words, bag);
}

}  // namespace qfsum
