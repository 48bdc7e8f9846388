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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "vpcme/dataset.hpp"

namespace vpcme {

/// Multi-label k-nearest-neighbour classifier with per-label MAP inference.
///
/// freq_pos[l][c] counts training instances that carry label l and whose k
/// nearest neighbours (self excluded) contain exactly c instances with l;
/// freq_neg[l][c] is the same for instances without l.
struct MlknnModel {
  std::size_t k_neighbors = 10;
  double smoothing = 1.0;
  Eigen::MatrixXd train_points;
  std::vector<LabelSet> train_labels;
  std::vector<double> prior_pos;
  std::vector<std::vector<std::size_t>> freq_pos;
  std::vector<std::vector<std::size_t>> freq_neg;

  std::size_t label_count() const { return prior_pos.size(); }
  std::size_t dim() const { return static_cast<std::size_t>(train_points.cols()); }
};

/// Indices of the k points closest to `query` in Euclidean distance,
/// nearest first, ties going to the lower index. `exclude` removes one
/// index from consideration.
std::vector<std::size_t> nearest_neighbors(const Eigen::MatrixXd& points, const Eigen::VectorXd& query,
                                           std::size_t k, std::optional<std::size_t> exclude = std::nullopt);

/// Requires n >= 2 and k_neighbors < n; throws ConfigError otherwise.
MlknnModel fit_mlknn(const Eigen::MatrixXd& points, const std::vector<LabelSet>& labels,
                     std::size_t k_neighbors = 10, double smoothing = 1.0);

/// P(label l | positive-neighbour count) for every label, each in (0, 1).
std::vector<double> posterior_scores(const MlknnModel& model, const Eigen::VectorXd& query);

/// Labels whose score is strictly above 0.5.
LabelSet threshold_scores(std::span<const double> scores);

LabelSet predict_bipartition(const MlknnModel& model, const Eigen::VectorXd& query);

}  // namespace vpcme
