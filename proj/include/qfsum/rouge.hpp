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

#ifndef QFSUM_ROUGE_HPP_
#define QFSUM_ROUGE_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qfsum {

/// Evaluation setup. The defaults mirror the usual DUC main-task run:
/// n-grams to 4, weighted LCS at 1.2, 250-word truncation, unlimited skip
/// gap with unigrams pooled into SU, stemming on, stopwords kept, 1000
/// bootstrap resamples at 95% confidence.
struct RougeConfig {
  int max_n = 4;
  double wlcs_weight = 1.2;
  int length_limit_words = 250;
  int skip_gap = -1;  // unlimited
  bool include_unigrams_in_su = true;
  bool stemming = true;
  bool keep_stopwords = true;
  int bootstrap_samples = 1000;
  double confidence = 0.95;
  std::uint64_t bootstrap_seed = 20070401;
  double alpha = 0.5;

  static RougeConfig from_json_text(const std::string& text);
  std::string to_json_text() const;
};

struct RougeTriple {
  double recall = 0.0;
  double precision = 0.0;
  double f = 0.0;
};

struct MetricScores {
  RougeTriple point;
  RougeTriple lower;
  RougeTriple upper;
};

struct RougeReport {
  // Keys: rouge_1 .. rouge_<max_n>, rouge_l, rouge_w, rouge_su.
  std::map<std::string, MetricScores> metrics;
  int topic_count = 0;

  std::string to_json_text() const;
};

// Tokenize + stem + truncate a summary to the word limit. Words beyond the
// limit never influence any score.
std::vector<std::string> rouge_tokenize(const std::string& text, const RougeConfig& cfg);

// Clipped n-gram overlap against each reference, averaged over references.
// Throws kInvalidArgument on an empty reference set.
RougeTriple rouge_n(const std::vector<std::string>& candidate,
                    const std::vector<std::vector<std::string>>& references, int n,
                    const RougeConfig& cfg);

// Summary-level LCS / weighted-LCS / skip-bigram(+unigram) measures over the
// flat truncated token streams, averaged over references.
RougeTriple rouge_l(const std::vector<std::string>& candidate,
                    const std::vector<std::vector<std::string>>& references,
                    const RougeConfig& cfg);
RougeTriple rouge_w(const std::vector<std::string>& candidate,
                    const std::vector<std::vector<std::string>>& references,
                    const RougeConfig& cfg);
RougeTriple rouge_su(const std::vector<std::string>& candidate,
                     const std::vector<std::vector<std::string>>& references,
                     const RougeConfig& cfg);

// Percentile bootstrap over per-topic scores: resample topics with
// replacement, average, take the (1-confidence)/2 quantiles. Deterministic
// under a fixed seed. A single topic degenerates to (point, point).
std::pair<double, double> bootstrap_ci(const std::vector<double>& topic_scores, int samples,
                                       double confidence, std::uint64_t seed);

// Full report over candidate summaries (topic -> text) and reference sets
// (topic -> texts). Every candidate topic must have at least one reference.
RougeReport evaluate_rouge(const std::map<std::string, std::string>& candidates,
                           const std::map<std::string, std::vector<std::string>>& references,
                           const RougeConfig& cfg);

// Directory form: candidates/<topic>.txt against references/<topic>/<ref>.txt.
RougeReport evaluate_rouge_dirs(const std::string& candidate_dir,
                                const std::string& reference_dir, const RougeConfig& cfg);

// Mean of one metric/statistic over topics, used as the tuning feedback.
// `metric` is a report key plus statistic suffix, e.g. "rouge_2:f",
// "rouge_1:r"; plain "rouge_2" means its F-score.
double rouge_feedback(const std::map<std::string, std::string>& candidates,
                      const std::map<std::string, std::vector<std::string>>& references,
                      const RougeConfig& cfg, const std::string& metric);

}  // namespace qfsum

#endif  // QFSUM_ROUGE_HPP_
