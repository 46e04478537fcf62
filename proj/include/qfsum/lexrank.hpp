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

#ifndef QFSUM_LEXRANK_HPP_
#define QFSUM_LEXRANK_HPP_

#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "qfsum/corpus.hpp"
#include "qfsum/text.hpp"

namespace qfsum {

/// idf_w = ln((N + 1) / (0.5 + sf_w)) where sf_w counts the sentences
/// containing w. Words never seen get the sf = 0 value of the same formula.
struct IdfTable {
  std::unordered_map<std::string, double> idf;
  int sentence_count = 0;
  double default_idf = 0.0;

  double get(const std::string& stem) const {
    auto it = idf.find(stem);
    return it == idf.end() ? default_idf : it->second;
  }
};

IdfTable compute_idf(const std::vector<const Sentence*>& sentences);

// Stem -> occurrence count over all tokens of the sentence.
std::unordered_map<std::string, int> term_counts(const Sentence& sentence);

// Stem -> occurrence count over the query sentences with stopwords removed.
std::unordered_map<std::string, int> query_term_counts(const std::vector<Sentence>& query,
                                                       const StopwordSet& stopwords);

// rel(s|q) = sum_w ln(tf_{w,s} + 1) * ln(tf_{w,q} + 1) * idf_w.
double relevance(const Sentence& sentence,
                 const std::unordered_map<std::string, int>& query_tf, const IdfTable& idf);

// IDF-weighted cosine similarity; 0 when either side has zero norm.
double cosine_sim(const Sentence& x, const Sentence& y, const IdfTable& idf);

struct LexRankOptions {
  double d = 0.7;      // bias toward query relevance
  double eps = 1e-8;   // L1 stationarity residual bound
  int max_iter = 1000;
};

struct LexRankResult {
  std::vector<double> scores;  // stationary probabilities, input order
  bool converged = false;
  int iterations = 0;
};

// Row-stochastic transition matrix Q = d*A + (1-d)*B: every row of A is the
// normalized relevance distribution and B is the row-normalized similarity
// matrix. Rows that would sum to zero are made uniform before normalizing.
Eigen::MatrixXd lexrank_matrix(const std::vector<const Sentence*>& sentences,
                               const std::vector<Sentence>& query, const StopwordSet& stopwords,
                               double d);

// Power method from the uniform distribution: p <- Q^T p until the L1
// residual drops to eps. Non-convergence returns the last iterate with
// converged = false.
LexRankResult stationary_distribution(const Eigen::MatrixXd& q, double eps, int max_iter);

LexRankResult lexrank_scores(const std::vector<const Sentence*>& sentences,
                             const std::vector<Sentence>& query, const StopwordSet& stopwords,
                             const LexRankOptions& options);

}  // namespace qfsum

#endif  // QFSUM_LEXRANK_HPP_
