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

#ifndef QFSUM_LEXSIM_HPP_
#define QFSUM_LEXSIM_HPP_

#include <set>
#include <string>
#include <vector>

#include "qfsum/corpus.hpp"
#include "qfsum/lexicon.hpp"

namespace qfsum {

using TokenSeq = std::vector<std::string>;
using Pool = std::vector<TokenSeq>;

// --- n-gram overlap -------------------------------------------------------

// Clipped n-gram co-occurrence over the sentence's n-gram count. Zero when
// either side is shorter than n.
double ngram_overlap(const TokenSeq& sentence, const TokenSeq& query, int n);

// Max of ngram_overlap over the sentence pool x query pool cross product.
double ngram_score(const Pool& sentence_pool, const Pool& query_pool, int n);

// Content-word matches against the query-related word set, over the
// sentence's content-word count.
double unigram_score(const Sentence& sentence, const std::set<std::string>& qrw);

// --- subsequence measures -------------------------------------------------

int lcs_length(const TokenSeq& a, const TokenSeq& b);

// F = (1 - alpha) * LCS/|q| + alpha * LCS/|s|.
double lcs_fmeasure(const TokenSeq& s, const TokenSeq& q, double alpha = 0.5);
double lcs_score(const Pool& sentence_pool, const Pool& query_pool, double alpha = 0.5);

// Weighted-LCS accumulation crediting runs of consecutive matches via
// f(k) = k^weight; the F-measure applies f^-1 to the length-normalized value.
double wlcs_value(const TokenSeq& a, const TokenSeq& b, double weight);
double wlcs_fmeasure(const TokenSeq& s, const TokenSeq& q, double weight = 1.2,
                     double alpha = 0.5);
double wlcs_score(const Pool& sentence_pool, const Pool& query_pool, double weight = 1.2,
                  double alpha = 0.5);

// --- skip bigrams ----------------------------------------------------------

// d_skip < 0 means unlimited gap; d_skip = 0 degenerates to contiguous
// bigrams. The gap is the number of words strictly between the pair.
int skip_bigram_matches(const TokenSeq& a, const TokenSeq& b, int d_skip);

// Number of within-distance ordered pairs in a sequence of given length;
// equals C(length, 2) when unlimited.
long long skip_bigram_count(int length, int d_skip);

double skip_bigram_fmeasure(const TokenSeq& s, const TokenSeq& q, int d_skip,
                            double alpha = 0.5);
double skip_bigram_score(const Pool& sentence_pool, const Pool& query_pool, int d_skip,
                         double alpha = 0.5);

// --- head overlap ----------------------------------------------------------

// Distinct stemmed content words occurring in head position of a triple.
std::set<std::string> head_set(const Sentence& sentence, const StopwordSet& stopwords);

struct HeadScores {
  double exact = 0.0;
  double related = 0.0;
};

// exact: |sentence heads ∩ query heads| / |sentence heads|. related: the
// same ratio over the head-related sets (synonyms, hypernyms, hyponyms of
// each side's heads; the heads themselves are not members).
HeadScores head_scores(const std::set<std::string>& sentence_heads,
                       const std::set<std::string>& query_heads, const Lexicon& lexicon);

// --- lexical semantic overlaps ----------------------------------------------

enum class LexsemKind { kSynonym, kHypernymHyponym, kGloss };

// Matches between the kind-specific expansion set of the sentence and the
// query-related words, over the expansion set size. Synonyms expand content
// words; hypernyms/hyponyms and gloss words expand the sentence's nouns.
double lexsem_overlap(LexsemKind kind, const Sentence& sentence,
                      const std::set<std::string>& qrw, const Lexicon& lexicon);

// --- thesaurus similarity ----------------------------------------------------

// For every query content word, picks the sense cluster with the highest
// overlap against the query-related words (lowest index on ties) and unions
// the chosen clusters' member words.
std::set<std::string> choose_thesaurus_bag(const std::vector<Sentence>& query,
                                           const std::set<std::string>& qrw,
                                           const Thesaurus& thesaurus);

// |sentence words in the bag| / |sentence words| over distinct stems.
double thesaurus_similarity(const Sentence& sentence, const std::set<std::string>& bag);

}  // namespace qfsum

#endif  // QFSUM_LEXSIM_HPP_
