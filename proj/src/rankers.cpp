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

#include "qfsum/rankers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Cholesky>

#include "qfsum/error.hpp"

namespace qfsum {
namespace {

constexpr double kLogTwoPi = 1.8378770664093453;  // ln(2*pi)

// Deterministic bounded draw; avoids std::uniform_int_distribution whose
// output is implementation-defined.
std::size_t bounded(std::mt19937_64& rng, std::size_t n) { return rng() % n; }

std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(idx[i - 1], idx[bounded(rng, i)]);
  return idx;
}

int nearest_mean(const Eigen::VectorXd& x, const std::vector<Eigen::VectorXd>& means) {
  int best = 0;
  double best_d = (x - means[0]).squaredNorm();
  for (int c = 1; c < static_cast<int>(means.size()); ++c) {
    double d = (x - means[static_cast<std::size_t>(c)]).squaredNorm();
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

struct Cholesky {
  Eigen::LLT<Eigen::MatrixXd> llt;
  double sqrt_det = 0.0;
  bool ok = false;

  explicit Cholesky(const Eigen::MatrixXd& sigma) : llt(sigma) {
    if (llt.info() != Eigen::Success) return;
    sqrt_det = 1.0;
    const auto& l = llt.matrixLLT();
    for (int i = 0; i < sigma.rows(); ++i) sqrt_det *= l(i, i);
    ok = std::isfinite(sqrt_det) && sqrt_det > kCovarianceGuard;
  }
};

double log_pdf_with(const Cholesky& chol, const Eigen::VectorXd& x, const Eigen::VectorXd& mu) {
  Eigen::VectorXd diff = x - mu;
  double quad = diff.dot(chol.llt.solve(diff));
  double d = static_cast<double>(x.size());
  return -0.5 * quad - 0.5 * d * kLogTwoPi - std::log(chol.sqrt_det);
}

double mean_of_entries(const Eigen::VectorXd& v) { return v.sum() / static_cast<double>(v.size()); }

// Posterior matrix (n x k) and per-point log marginals under the components.
struct Estep {
  Eigen::MatrixXd posteriors;
  double log_likelihood = 0.0;
};

Estep posterior_pass(const Eigen::MatrixXd& points,
                     const std::vector<GaussianComponent>& components,
                     const std::vector<Cholesky>& chols) {
  const int n = static_cast<int>(points.rows());
  const int k = static_cast<int>(components.size());
  Estep out;
  out.posteriors.resize(n, k);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd x = points.row(i);
    Eigen::VectorXd logp(k);
    for (int c = 0; c < k; ++c) {
      const auto& comp = components[static_cast<std::size_t>(c)];
      double lp = comp.prior > 0.0 ? std::log(comp.prior) : -std::numeric_limits<double>::infinity();
      logp(c) = lp + log_pdf_with(chols[static_cast<std::size_t>(c)], x, comp.mean);
    }
    double mx = logp.maxCoeff();
    if (!std::isfinite(mx))
      throw Error(ErrorCode::kNumeric, "non-finite mixture likelihood");
    double sum = 0.0;
    for (int c = 0; c < k; ++c) sum += std::exp(logp(c) - mx);
    for (int c = 0; c < k; ++c) out.posteriors(i, c) = std::exp(logp(c) - mx) / sum;
    out.log_likelihood += mx + std::log(sum);
  }
  if (!std::isfinite(out.log_likelihood))
    throw Error(ErrorCode::kNumeric, "non-finite mixture log-likelihood");
  return out;
}

std::vector<Cholesky> factorize_all(const std::vector<GaussianComponent>& components) {
  std::vector<Cholesky> chols;
  chols.reserve(components.size());
  for (std::size_t c = 0; c < components.size(); ++c) {
    chols.emplace_back(components[c].covariance);
    if (!chols.back().ok)
      throw Error(ErrorCode::kNumeric,
                  "covariance of component " + std::to_string(c) + " fails the guard");
  }
  return chols;
}

}  // namespace

const char* const kFeatureNames[kFeatureCount] = {
    "ngram1",    "ngram2",   "ngram3",           "ngram4",  "lcs",     "wlcs",
    "skip_bigram", "head_exact", "head_related", "be_score", "synonym", "hypernym_hyponym",
    "gloss",     "dep_sim",  "prox_sim",         "lexrank", "syntactic_tk", "semantic_sstk"};

int feature_index(std::string_view name) {
  for (int i = 0; i < kFeatureCount; ++i)
    if (name == kFeatureNames[i]) return i;
  return -1;
}

SystemVariant variant_from_name(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "LEX") return SystemVariant::kLex;
  if (upper == "LEXSEM") return SystemVariant::kLexsem;
  if (upper == "SYN") return SystemVariant::kSyn;
  if (upper == "COS") return SystemVariant::kCos;
  if (upper == "SYS1") return SystemVariant::kSys1;
  if (upper == "SYS2") return SystemVariant::kSys2;
  if (upper == "ALL") return SystemVariant::kAll;
  if (upper == "BASE") return SystemVariant::kBase;
  throw Error(ErrorCode::kConfig, "unknown system variant: " + std::string(name));
}

const char* variant_name(SystemVariant variant) {
  switch (variant) {
    case SystemVariant::kLex: return "LEX";
    case SystemVariant::kLexsem: return "LEXSEM";
    case SystemVariant::kSyn: return "SYN";
    case SystemVariant::kCos: return "COS";
    case SystemVariant::kSys1: return "SYS1";
    case SystemVariant::kSys2: return "SYS2";
    case SystemVariant::kAll: return "ALL";
    case SystemVariant::kBase: return "BASE";
  }
  return "ALL";
}

FeatureMask variant_mask(SystemVariant variant) {
  FeatureMask mask{};
  auto set = [&mask](std::initializer_list<const char*> names) {
    for (const char* n : names) mask[static_cast<std::size_t>(feature_index(n))] = true;
  };
  switch (variant) {
    case SystemVariant::kLex:
      set({"ngram1", "ngram2", "ngram3", "ngram4", "lcs", "wlcs", "skip_bigram", "head_exact",
           "head_related", "be_score"});
      break;
    case SystemVariant::kLexsem:
      set({"synonym", "hypernym_hyponym", "gloss", "dep_sim", "prox_sim"});
      break;
    case SystemVariant::kSyn:
      set({"syntactic_tk"});
      break;
    case SystemVariant::kCos:
      set({"lexrank"});
      break;
    case SystemVariant::kSys1:
      mask.fill(true);
      mask[static_cast<std::size_t>(feature_index("syntactic_tk"))] = false;
      mask[static_cast<std::size_t>(feature_index("semantic_sstk"))] = false;
      break;
    case SystemVariant::kSys2:
      mask.fill(true);
      mask[static_cast<std::size_t>(feature_index("semantic_sstk"))] = false;
      break;
    case SystemVariant::kAll:
      mask.fill(true);
      break;
    case SystemVariant::kBase:
      break;  // baseline bypasses features
  }
  return mask;
}

int active_feature_count(SystemVariant variant) {
  FeatureMask mask = variant_mask(variant);
  return static_cast<int>(std::count(mask.begin(), mask.end(), true));
}

void normalize_features(std::vector<FeatureRow>& rows) {
  if (rows.empty()) return;
  for (int f = 0; f < kFeatureCount; ++f) {
    double mx = 0.0;
    for (const FeatureRow& row : rows) mx = std::max(mx, row[static_cast<std::size_t>(f)]);
    if (mx > 0.0)
      for (FeatureRow& row : rows) row[static_cast<std::size_t>(f)] /= mx;
  }
}

std::vector<double> score_sentences(const std::vector<FeatureRow>& rows, const Weights& w,
                                    const FeatureMask& mask) {
  std::vector<double> scores;
  scores.reserve(rows.size());
  for (const FeatureRow& row : rows) {
    double s = 0.0;
    for (int f = 0; f < kFeatureCount; ++f)
      if (mask[static_cast<std::size_t>(f)])
        s += row[static_cast<std::size_t>(f)] * w[static_cast<std::size_t>(f)];
    scores.push_back(s);
  }
  return scores;
}

TuneResult tune_weights(const std::function<double(const Weights&)>& feedback,
                        const TuneOptions& options) {
  TuneResult result;
  result.weights.fill(options.init);

  auto evaluate = [&](const Weights& w) {
    double v = feedback(w);
    result.evaluations++;
    if (!std::isfinite(v))
      throw Error(ErrorCode::kNumeric, "weight tuning feedback is not finite");
    return v;
  };

  double best = evaluate(result.weights);
  result.accepted_trace.push_back(best);
  for (int i = 0; i < kFeatureCount; ++i) {
    double climbed = 0.0;
    while (climbed + options.step <= options.max_climb + 1e-12) {
      result.weights[static_cast<std::size_t>(i)] += options.step;
      climbed += options.step;
      double cur = evaluate(result.weights);
      if (cur > best) {
        best = cur;
        result.accepted_trace.push_back(best);
      } else if (cur == best) {
        // Plateau: the step is kept (the feedback did not decrease) but
        // climbing further cannot be justified.
        result.accepted_trace.push_back(best);
        break;
      } else {
        result.weights[static_cast<std::size_t>(i)] -= options.step;
        break;
      }
    }
  }
  return result;
}

KMeansResult kmeans_from(const Eigen::MatrixXd& points, std::vector<Eigen::VectorXd> means) {
  const int n = static_cast<int>(points.rows());
  const int k = static_cast<int>(means.size());
  KMeansResult result;
  result.k = k;
  result.means = std::move(means);
  result.assignment.assign(static_cast<std::size_t>(n), -1);

  for (int iter = 1; iter <= 1000; ++iter) {
    result.iterations = iter;
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      int c = nearest_mean(points.row(i), result.means);
      if (c != result.assignment[static_cast<std::size_t>(i)]) {
        result.assignment[static_cast<std::size_t>(i)] = c;
        changed = true;
      }
    }

    // Re-seed emptied clusters with the point farthest from its centroid.
    std::vector<int> sizes(static_cast<std::size_t>(k), 0);
    for (int a : result.assignment) sizes[static_cast<std::size_t>(a)]++;
    for (int c = 0; c < k; ++c) {
      if (sizes[static_cast<std::size_t>(c)] > 0) continue;
      int farthest = -1;
      double far_d = -1.0;
      for (int i = 0; i < n; ++i) {
        int a = result.assignment[static_cast<std::size_t>(i)];
        if (sizes[static_cast<std::size_t>(a)] <= 1) continue;
        double d = (points.row(i).transpose() - result.means[static_cast<std::size_t>(a)])
                       .squaredNorm();
        if (d > far_d) {
          far_d = d;
          farthest = i;
        }
      }
      if (farthest < 0) continue;
      int old = result.assignment[static_cast<std::size_t>(farthest)];
      sizes[static_cast<std::size_t>(old)]--;
      sizes[static_cast<std::size_t>(c)]++;
      result.assignment[static_cast<std::size_t>(farthest)] = c;
      changed = true;
    }

    if (!changed) break;

    for (int c = 0; c < k; ++c) {
      Eigen::VectorXd sum = Eigen::VectorXd::Zero(points.cols());
      int count = 0;
      for (int i = 0; i < n; ++i) {
        if (result.assignment[static_cast<std::size_t>(i)] != c) continue;
        sum += points.row(i).transpose();
        count++;
      }
      if (count > 0) result.means[static_cast<std::size_t>(c)] = sum / count;
    }
  }
  return result;
}

KMeansResult kmeans(const Eigen::MatrixXd& points, int k, std::uint64_t seed) {
  const int n = static_cast<int>(points.rows());
  if (k < 1 || k > n)
    throw Error(ErrorCode::kInvalidArgument,
                "kmeans needs 1 <= k <= point count, got k=" + std::to_string(k) + " over " +
                    std::to_string(n) + " points");

  std::vector<Eigen::VectorXd> means;
  bool reduced = false;
  auto order = shuffled_indices(static_cast<std::size_t>(n), seed);
  for (std::size_t pos = 0; pos < order.size() && static_cast<int>(means.size()) < k; ++pos) {
    Eigen::VectorXd candidate = points.row(static_cast<int>(order[pos]));
    bool duplicate = false;
    for (const auto& m : means)
      if ((m - candidate).squaredNorm() == 0.0) duplicate = true;
    if (!duplicate) means.push_back(std::move(candidate));
  }
  if (static_cast<int>(means.size()) < k) reduced = true;

  KMeansResult result = kmeans_from(points, std::move(means));
  result.k_reduced = reduced;
  return result;
}

double within_cluster_ss(const Eigen::MatrixXd& points, const KMeansResult& clustering) {
  double ss = 0.0;
  for (int i = 0; i < static_cast<int>(points.rows()); ++i) {
    int c = clustering.assignment[static_cast<std::size_t>(i)];
    ss += (points.row(i).transpose() - clustering.means[static_cast<std::size_t>(c)])
              .squaredNorm();
  }
  return ss;
}

bool covariance_guard_ok(const Eigen::MatrixXd& sigma) { return Cholesky(sigma).ok; }

double gaussian_log_pdf(const Eigen::VectorXd& x, const Eigen::VectorXd& mu,
                        const Eigen::MatrixXd& sigma) {
  Cholesky chol(sigma);
  if (!chol.ok)
    throw Error(ErrorCode::kNumeric, "gaussian covariance fails the singularity guard");
  return log_pdf_with(chol, x, mu);
}

double gaussian_pdf(const Eigen::VectorXd& x, const Eigen::VectorXd& mu,
                    const Eigen::MatrixXd& sigma) {
  return std::exp(gaussian_log_pdf(x, mu, sigma));
}

Eigen::MatrixXd cluster_covariance(const Eigen::MatrixXd& points,
                                   const std::vector<int>& assignment, int cluster,
                                   const Eigen::VectorXd& mean) {
  const int d = static_cast<int>(points.cols());
  Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(d, d);
  int count = 0;
  for (int i = 0; i < static_cast<int>(points.rows()); ++i) {
    if (assignment[static_cast<std::size_t>(i)] != cluster) continue;
    Eigen::VectorXd diff = points.row(i).transpose() - mean;
    sigma += diff * diff.transpose();
    count++;
  }
  if (count < 2) return Eigen::MatrixXd::Identity(d, d);
  return sigma / static_cast<double>(count - 1);
}

KMeansScores kmeans_scores(const Eigen::MatrixXd& points, int k, std::uint64_t seed) {
  KMeansScores out;
  out.clustering = kmeans(points, k, seed);
  const int kk = out.clustering.k;
  const int n = static_cast<int>(points.rows());

  for (int c = 0; c < kk; ++c) {
    GaussianComponent comp;
    comp.mean = out.clustering.means[static_cast<std::size_t>(c)];
    comp.covariance = cluster_covariance(points, out.clustering.assignment, c, comp.mean);
    comp.prior = 1.0 / static_cast<double>(kk);
    if (!covariance_guard_ok(comp.covariance)) {
      comp.covariance += 1e-6 * Eigen::MatrixXd::Identity(points.cols(), points.cols());
      if (!covariance_guard_ok(comp.covariance))
        throw Error(ErrorCode::kNumeric, "kmeans component " + std::to_string(c) +
                                             ": covariance fails the guard after jitter");
    }
    out.components.push_back(std::move(comp));
  }

  out.relevant_component = 0;
  double best_mean = mean_of_entries(out.components[0].mean);
  for (int c = 1; c < kk; ++c) {
    double m = mean_of_entries(out.components[static_cast<std::size_t>(c)].mean);
    if (m > best_mean) {
      best_mean = m;
      out.relevant_component = c;
    }
  }

  std::vector<Cholesky> chols = factorize_all(out.components);
  Estep e = posterior_pass(points, out.components, chols);
  out.posteriors = std::move(e.posteriors);
  out.scores.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.scores.push_back(out.posteriors(i, out.relevant_component));
  return out;
}

EmResult em_fit_from(const Eigen::MatrixXd& points, std::vector<GaussianComponent> init,
                     const EmOptions& options) {
  const int n = static_cast<int>(points.rows());
  const int k = static_cast<int>(init.size());
  if (k < 1 || k > n)
    throw Error(ErrorCode::kInvalidArgument, "em needs 1 <= k <= point count");

  // Initial covariances get escalating diagonal jitter until usable.
  for (std::size_t c = 0; c < init.size(); ++c) {
    double jitter = 1e-6;
    int tries = 0;
    while (!covariance_guard_ok(init[c].covariance)) {
      if (++tries > 16)
        throw Error(ErrorCode::kNumeric,
                    "em component " + std::to_string(c) + ": unusable initial covariance");
      init[c].covariance +=
          jitter * Eigen::MatrixXd::Identity(points.cols(), points.cols());
      jitter *= 10.0;
    }
  }

  EmResult result;
  result.components = std::move(init);
  double prev_ll = -std::numeric_limits<double>::infinity();

  for (int iter = 0; iter < options.max_iter; ++iter) {
    std::vector<Cholesky> chols = factorize_all(result.components);
    Estep e = posterior_pass(points, result.components, chols);
    result.responsibilities = std::move(e.posteriors);
    result.log_likelihoods.push_back(e.log_likelihood);

    if (iter > 0) {
      double increase = e.log_likelihood - prev_ll;
      double scale = std::max(1.0, std::abs(prev_ll));
      if (increase < options.tol * scale) {
        result.converged = true;
        break;
      }
    }
    prev_ll = e.log_likelihood;

    for (int c = 0; c < k; ++c) {
      double weight = result.responsibilities.col(c).sum();
      GaussianComponent& comp = result.components[static_cast<std::size_t>(c)];
      if (weight <= 0.0) {
        comp.prior = 0.0;
        continue;
      }
      Eigen::VectorXd mean = Eigen::VectorXd::Zero(points.cols());
      for (int i = 0; i < n; ++i)
        mean += result.responsibilities(i, c) * points.row(i).transpose();
      mean /= weight;

      Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(points.cols(), points.cols());
      for (int i = 0; i < n; ++i) {
        Eigen::VectorXd diff = points.row(i).transpose() - mean;
        sigma += result.responsibilities(i, c) * (diff * diff.transpose());
      }
      sigma /= weight;

      comp.mean = std::move(mean);
      comp.prior = weight / static_cast<double>(n);
      if (covariance_guard_ok(sigma))
        comp.covariance = std::move(sigma);
      else
        result.guard_skips++;  // keep the previous covariance
    }
  }
  return result;
}

EmResult em_fit(const Eigen::MatrixXd& points, int k, std::uint64_t seed,
                const EmOptions& options) {
  KMeansResult km = kmeans(points, k, seed);
  std::vector<GaussianComponent> init;
  for (int c = 0; c < km.k; ++c) {
    GaussianComponent comp;
    comp.mean = km.means[static_cast<std::size_t>(c)];
    comp.covariance = cluster_covariance(points, km.assignment, c, comp.mean);
    comp.prior = 1.0 / static_cast<double>(km.k);
    init.push_back(std::move(comp));
  }
  return em_fit_from(points, std::move(init), options);
}

EmSelection em_select(const EmResult& em) {
  EmSelection sel;
  const int k = static_cast<int>(em.components.size());
  const int n = static_cast<int>(em.responsibilities.rows());

  sel.relevant_component = 0;
  double best_mean = mean_of_entries(em.components[0].mean);
  for (int c = 1; c < k; ++c) {
    double m = mean_of_entries(em.components[static_cast<std::size_t>(c)].mean);
    if (m > best_mean) {
      best_mean = m;
      sel.relevant_component = c;
    }
  }

  sel.components_identical = k > 1;
  for (int c = 1; c < k && sel.components_identical; ++c) {
    const auto& a = em.components[0];
    const auto& b = em.components[static_cast<std::size_t>(c)];
    if ((a.mean - b.mean).lpNorm<Eigen::Infinity>() > 1e-12 ||
        (a.covariance - b.covariance).lpNorm<Eigen::Infinity>() > 1e-12 ||
        std::abs(a.prior - b.prior) > 1e-12)
      sel.components_identical = false;
  }

  for (int i = 0; i < n; ++i) {
    if (sel.components_identical || em.responsibilities(i, sel.relevant_component) > 0.5)
      sel.relevant_points.push_back(i);
  }
  return sel;
}

}  // namespace qfsum
