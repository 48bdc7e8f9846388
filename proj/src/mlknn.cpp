/*
 * Copyright 2026 The VPCME Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "vpcme/mlknn.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "vpcme/errors.hpp"

namespace vpcme {

std::vector<std::size_t> nearest_neighbors(const Eigen::MatrixXd& points, const Eigen::VectorXd& query,
                                           std::size_t k, std::optional<std::size_t> exclude) {
  const auto n = static_cast<std::size_t>(points.rows());
  std::vector<std::pair<double, std::size_t>> dist;
  dist.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (exclude && *exclude == i) continue;
    double d2 = 0.0;
    for (Eigen::Index c = 0; c < points.cols(); ++c) {
      const double diff = points(static_cast<Eigen::Index>(i), c) - query(c);
      d2 += diff * diff;
    }
    dist.emplace_back(d2, i);
  }
  k = std::min(k, dist.size());
  std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k), dist.end());
  std::vector<std::size_t> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = dist[i].second;
  return out;
}

MlknnModel fit_mlknn(const Eigen::MatrixXd& points, const std::vector<LabelSet>& labels,
                     std::size_t k_neighbors, double smoothing) {
  const auto n = static_cast<std::size_t>(points.rows());
  if (labels.size() != n) throw ValidationError("MLKNN points and labels differ in row count");
  if (n < 2) throw ConfigError("MLKNN needs at least 2 training instances");
  if (k_neighbors < 1 || k_neighbors >= n) {
    throw ConfigError("MLKNN needs 1 <= k < n (k=" + std::to_string(k_neighbors) + ", n=" + std::to_string(n) + ")");
  }
  if (!(smoothing > 0.0)) throw ConfigError("MLKNN smoothing must be positive");
  const std::size_t label_count = labels.front().size();
  for (const auto& row : labels) {
    if (row.size() != label_count) throw ValidationError("MLKNN label rows differ in width");
  }

  MlknnModel model;
  model.k_neighbors = k_neighbors;
  model.smoothing = smoothing;
  model.train_points = points;
  model.train_labels = labels;
  model.prior_pos.resize(label_count);
  model.freq_pos.assign(label_count, std::vector<std::size_t>(k_neighbors + 1, 0));
  model.freq_neg.assign(label_count, std::vector<std::size_t>(k_neighbors + 1, 0));

  for (std::size_t l = 0; l < label_count; ++l) {
    std::size_t positives = 0;
    for (const auto& row : labels) positives += row[l];
    model.prior_pos[l] = (smoothing + static_cast<double>(positives)) / (2.0 * smoothing + static_cast<double>(n));
  }

  std::vector<std::size_t> counts(label_count);
  Eigen::VectorXd query(points.cols());
  for (std::size_t i = 0; i < n; ++i) {
    query = points.row(static_cast<Eigen::Index>(i)).transpose();
    const auto neighbors = nearest_neighbors(points, query, k_neighbors, i);
    std::fill(counts.begin(), counts.end(), 0);
    for (auto nb : neighbors) {
      for (std::size_t l = 0; l < label_count; ++l) counts[l] += labels[nb][l];
    }
    for (std::size_t l = 0; l < label_count; ++l) {
      auto& table = labels[i][l] ? model.freq_pos[l] : model.freq_neg[l];
      ++table[counts[l]];
    }
  }
  return model;
}

std::vector<double> posterior_scores(const MlknnModel& model, const Eigen::VectorXd& query) {
  if (static_cast<std::size_t>(query.size()) != model.dim()) {
    throw ValidationError("MLKNN query has " + std::to_string(query.size()) + " dimensions, model has " +
                          std::to_string(model.dim()));
  }
  const auto neighbors = nearest_neighbors(model.train_points, query, model.k_neighbors);
  const double s = model.smoothing;
  const double k = static_cast<double>(model.k_neighbors);

  std::vector<double> scores(model.label_count());
  for (std::size_t l = 0; l < model.label_count(); ++l) {
    std::size_t c = 0;
    for (auto nb : neighbors) c += model.train_labels[nb][l];
    const auto& pos = model.freq_pos[l];
    const auto& neg = model.freq_neg[l];
    const double pos_total = static_cast<double>(std::accumulate(pos.begin(), pos.end(), std::size_t{0}));
    const double neg_total = static_cast<double>(std::accumulate(neg.begin(), neg.end(), std::size_t{0}));
    const double like_pos = (s + static_cast<double>(pos[c])) / (s * (k + 1.0) + pos_total);
    const double like_neg = (s + static_cast<double>(neg[c])) / (s * (k + 1.0) + neg_total);
    const double prior = model.prior_pos[l];
    const double joint_pos = prior * like_pos;
    const double joint_neg = (1.0 - prior) * like_neg;
    scores[l] = joint_pos / (joint_pos + joint_neg);
  }
  return scores;
}

LabelSet threshold_scores(std::span<const double> scores) {
  LabelSet out(scores.size(), false);
  for (std::size_t l = 0; l < scores.size(); ++l) out[l] = scores[l] > 0.5;
  return out;
}

LabelSet predict_bipartition(const MlknnModel& model, const Eigen::VectorXd& query) {
  return threshold_scores(posterior_scores(model, query));
}

}  // namespace vpcme
