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

#include "qfsum/lexrank.hpp"

#include <cmath>

#include "qfsum/error.hpp"

namespace qfsum {

IdfTable compute_idf(const std::vector<const Sentence*>& sentences) {
  IdfTable table;
  table.sentence_count = static_cast<int>(sentences.size());
  std::unordered_map<std::string, int> sentence_freq;
  for (const Sentence* s : sentences) {
    std::unordered_map<std::string, int> seen;
    for (const Token& t : s->tokens) seen[t.stem] = 1;
    for (const auto& [stem, one] : seen) sentence_freq[stem] += one;
  }
  const double n1 = static_cast<double>(table.sentence_count) + 1.0;
  for (const auto& [stem, sf] : sentence_freq)
    table.idf[stem] = std::log(n1 / (0.5 + static_cast<double>(sf)));
  table.default_idf = std::log(n1 / 0.5);
  return table;
}

std::unordered_map<std::string, int> term_counts(const Sentence& sentence) {
  std::unordered_map<std::string, int> counts;
  for (const Token& t : sentence.tokens) counts[t.stem]++;
  return counts;
}

std::unordered_map<std::string, int> query_term_counts(const std::vector<Sentence>& query,
                                                       const StopwordSet& stopwords) {
  std::unordered_map<std::string, int> counts;
  for (const Sentence& s : query)
    for (const Token& t : s.tokens)
      if (!stopwords.contains(t.stem)) counts[t.stem]++;
  return counts;
}

double relevance(const Sentence& sentence,
                 const std::unordered_map<std::string, int>& query_tf, const IdfTable& idf) {
  auto sentence_tf = term_counts(sentence);
  double rel = 0.0;
  for (const auto& [stem, tfq] : query_tf) {
    auto it = sentence_tf.find(stem);
    if (it == sentence_tf.end()) continue;
    rel += std::log(static_cast<double>(it->second) + 1.0) *
           std::log(static_cast<double>(tfq) + 1.0) * idf.get(stem);
  }
  return rel;
}

double cosine_sim(const Sentence& x, const Sentence& y, const IdfTable& idf) {
  auto tx = term_counts(x);
  auto ty = term_counts(y);
  double dot = 0.0;
  for (const auto& [stem, cx] : tx) {
    auto it = ty.find(stem);
    if (it == ty.end()) continue;
    double w = idf.get(stem);
    dot += static_cast<double>(cx) * static_cast<double>(it->second) * w * w;
  }
  if (dot == 0.0) return 0.0;
  auto norm = [&idf](const std::unordered_map<std::string, int>& tf) {
    double sum = 0.0;
    for (const auto& [stem, c] : tf) {
      double v = static_cast<double>(c) * idf.get(stem);
      sum += v * v;
    }
    return std::sqrt(sum);
  };
  double nx = norm(tx);
  double ny = norm(ty);
  if (nx == 0.0 || ny == 0.0) return 0.0;
  return dot / (nx * ny);
}

Eigen::MatrixXd lexrank_matrix(const std::vector<const Sentence*>& sentences,
                               const std::vector<Sentence>& query, const StopwordSet& stopwords,
                               double d) {
  const int n = static_cast<int>(sentences.size());
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "lexrank needs at least one sentence");
  IdfTable idf = compute_idf(sentences);
  auto query_tf = query_term_counts(query, stopwords);

  Eigen::VectorXd rel(n);
  for (int i = 0; i < n; ++i)
    rel(i) = relevance(*sentences[static_cast<std::size_t>(i)], query_tf, idf);
  double rel_sum = rel.sum();
  Eigen::VectorXd rel_row =
      rel_sum > 0.0 ? Eigen::VectorXd(rel / rel_sum)
                    : Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));

  Eigen::MatrixXd sim(n, n);
  for (int i = 0; i < n; ++i) {
    sim(i, i) = 1.0;  // cosine of a sentence with itself
    for (int j = i + 1; j < n; ++j) {
      double s = cosine_sim(*sentences[static_cast<std::size_t>(i)],
                            *sentences[static_cast<std::size_t>(j)], idf);
      sim(i, j) = s;
      sim(j, i) = s;
    }
  }

  Eigen::MatrixXd q(n, n);
  for (int i = 0; i < n; ++i) {
    double row_sum = sim.row(i).sum();
    for (int j = 0; j < n; ++j) {
      double b = row_sum > 0.0 ? sim(i, j) / row_sum : 1.0 / static_cast<double>(n);
      q(i, j) = d * rel_row(j) + (1.0 - d) * b;
    }
  }
  return q;
}

LexRankResult stationary_distribution(const Eigen::MatrixXd& q, double eps, int max_iter) {
  const int n = static_cast<int>(q.rows());
  LexRankResult result;
  Eigen::VectorXd p = Eigen::VectorXd::Constant(n, 1.0 / static_cast<double>(n));
  for (int iter = 1; iter <= max_iter; ++iter) {
    Eigen::VectorXd next = q.transpose() * p;
    next /= next.sum();  // guards float drift; the sum is 1 up to rounding
    double residual = (next - p).lpNorm<1>();
    p = std::move(next);
    result.iterations = iter;
    if (residual <= eps) {
      result.converged = true;
      break;
    }
  }
  result.scores.assign(p.data(), p.data() + n);
  return result;
}

LexRankResult lexrank_scores(const std::vector<const Sentence*>& sentences,
                             const std::vector<Sentence>& query, const StopwordSet& stopwords,
                             const LexRankOptions& options) {
  Eigen::MatrixXd q = lexrank_matrix(sentences, query, stopwords, options.d);
  return stationary_distribution(q, options.eps, options.max_iter);
}

}  // namespace qfsum
