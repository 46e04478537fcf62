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

#ifndef QFSUM_RANKERS_HPP_
#define QFSUM_RANKERS_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qfsum {

// ---------------------------------------------------------------------------
// Feature inventory
// ---------------------------------------------------------------------------

inline constexpr int kFeatureCount = 18;

// Canonical column order. Every feature matrix, weight vector and mask is
// aligned with this.
extern const char* const kFeatureNames[kFeatureCount];

// Index in kFeatureNames, or -1.
int feature_index(std::string_view name);

using FeatureRow = std::array<double, kFeatureCount>;
using Weights = std::array<double, kFeatureCount>;
using FeatureMask = std::array<bool, kFeatureCount>;

enum class SystemVariant { kLex, kLexsem, kSyn, kCos, kSys1, kSys2, kAll, kBase };

SystemVariant variant_from_name(std::string_view name);  // throws kConfig on unknown
const char* variant_name(SystemVariant variant);
FeatureMask variant_mask(SystemVariant variant);
int active_feature_count(SystemVariant variant);

// Divides each feature column by its maximum over the cluster's sentences;
// all-zero columns stay zero.
void normalize_features(std::vector<FeatureRow>& rows);

// score_i = x_i . w restricted to the masked features.
std::vector<double> score_sentences(const std::vector<FeatureRow>& rows, const Weights& w,
                                    const FeatureMask& mask);

// ---------------------------------------------------------------------------
// Local-search weight tuning
// ---------------------------------------------------------------------------

struct TuneOptions {
  double step = 0.01;      // l
  double init = 0.5;       // v
  double max_climb = 1.0;  // maximum total increase per coordinate
};

struct TuneResult {
  Weights weights{};
  int evaluations = 0;  // feedback calls; climb steps = evaluations - 1
  // Feedback after the initial evaluation and after every accepted step;
  // non-decreasing by construction.
  std::vector<double> accepted_trace;
};

// One pass over the coordinates in canonical order. Each coordinate climbs
// in increments of `step` while the feedback improves; a step that leaves
// the feedback unchanged is kept but ends the climb, and a worsening step is
// rolled back. Feedback must be deterministic; non-finite values abort.
TuneResult tune_weights(const std::function<double(const Weights&)>& feedback,
                        const TuneOptions& options);

// ---------------------------------------------------------------------------
// K-means
// ---------------------------------------------------------------------------

struct KMeansResult {
  std::vector<int> assignment;        // point -> cluster
  std::vector<Eigen::VectorXd> means;
  int k = 0;                          // may be below the request (duplicates)
  bool k_reduced = false;
  int iterations = 0;
};

// Lloyd iterations with squared Euclidean distance until no assignment
// changes. Initial means are k distinct points drawn with the seeded
// generator; fewer distinct points reduce k. Emptied clusters are re-seeded
// with the point farthest from its centroid. Points are matrix rows.
KMeansResult kmeans(const Eigen::MatrixXd& points, int k, std::uint64_t seed);

// Lloyd iterations from the given means (the seeded path above resolves to
// this); exposed so independent re-runs can share an initialization.
KMeansResult kmeans_from(const Eigen::MatrixXd& points, std::vector<Eigen::VectorXd> means);

double within_cluster_ss(const Eigen::MatrixXd& points, const KMeansResult& clustering);

// ---------------------------------------------------------------------------
// Gaussian models
// ---------------------------------------------------------------------------

struct GaussianComponent {
  Eigen::VectorXd mean;
  Eigen::MatrixXd covariance;
  double prior = 0.0;
};

// sqrt(det(sigma)) must exceed this for a covariance to be usable.
inline constexpr double kCovarianceGuard = 1e-9;

// True when sigma admits a Cholesky factorization with sqrt(det) above the
// guard threshold.
bool covariance_guard_ok(const Eigen::MatrixXd& sigma);

// Density of N(mu, sigma) at x via a Cholesky solve. Throws kNumeric when
// the guard rejects sigma.
double gaussian_pdf(const Eigen::VectorXd& x, const Eigen::VectorXd& mu,
                    const Eigen::MatrixXd& sigma);
double gaussian_log_pdf(const Eigen::VectorXd& x, const Eigen::VectorXd& mu,
                        const Eigen::MatrixXd& sigma);

// Unbiased covariance (divide by N-1) of the points assigned to `cluster`;
// identity for clusters with fewer than two points.
Eigen::MatrixXd cluster_covariance(const Eigen::MatrixXd& points,
                                   const std::vector<int>& assignment, int cluster,
                                   const Eigen::VectorXd& mean);

struct KMeansScores {
  KMeansResult clustering;
  std::vector<GaussianComponent> components;  // equiprobable priors
  int relevant_component = 0;                 // larger mean of mean entries
  std::vector<double> scores;                 // posterior of the relevant component
  Eigen::MatrixXd posteriors;                 // n x k
};

// Bayes posteriors under per-cluster Gaussians fit on the K-means partition.
// A covariance rejected by the guard is retried once with 1e-6 added to the
// diagonal; a second failure raises kNumeric naming the component.
KMeansScores kmeans_scores(const Eigen::MatrixXd& points, int k, std::uint64_t seed);

// ---------------------------------------------------------------------------
// EM for Gaussian mixtures
// ---------------------------------------------------------------------------

struct EmOptions {
  double tol = 1e-6;  // relative log-likelihood increase to stop at
  int max_iter = 200;
};

struct EmResult {
  std::vector<GaussianComponent> components;
  Eigen::MatrixXd responsibilities;       // n x k membership probabilities
  std::vector<double> log_likelihoods;    // one entry per iteration
  bool converged = false;
  int guard_skips = 0;                    // covariance updates rejected
};

// Gaussian mixture EM seeded by K-means: the K-means means initialize the
// component means; covariances come from the unbiased per-cluster estimate
// and priors start at 1/k. The covariance update is skipped whenever the
// guard rejects it; the initial covariances instead get escalating diagonal
// jitter until the guard passes.
EmResult em_fit(const Eigen::MatrixXd& points, int k, std::uint64_t seed,
                const EmOptions& options);

// Same loop from explicit initial components.
EmResult em_fit_from(const Eigen::MatrixXd& points, std::vector<GaussianComponent> init,
                     const EmOptions& options);

struct EmSelection {
  int relevant_component = 0;
  bool components_identical = false;
  std::vector<int> relevant_points;  // posterior > 0.5, input order
};

// The question-relevant component is the one whose mean vector has the
// larger arithmetic mean (component 0 on ties). Points with relevant
// posterior > 0.5 are selected; identical components select every point.
EmSelection em_select(const EmResult& em);

}  // namespace qfsum

#endif  // QFSUM_RANKERS_HPP_
