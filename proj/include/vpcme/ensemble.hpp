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
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "vpcme/dataset.hpp"
#include "vpcme/mlknn.hpp"
#include "vpcme/projection.hpp"

namespace vpcme {

enum class Method {
  kVpcme,        // constraint projection ensemble with boosting-like reweighting
  kBaggingVpcp,  // same ensemble, weights kept uniform
  kMlknnSingle,  // one MLKNN in the original feature space
};

std::string_view method_name(Method method);
/// Accepts "vpcme", "bagging_vpcp", "mlknn_single"; throws ConfigError otherwise.
Method parse_method(std::string_view name);

struct VpcmeConfig {
  std::size_t ensemble_size = 30;
  double theta = 0.6;
  std::size_t k_neighbors = 10;
  double smoothing = 1.0;
  std::optional<std::size_t> target_must;    // defaults to n
  std::optional<std::size_t> target_cannot;  // defaults to n
  std::uint64_t seed = 0;
  bool boosting_enabled = true;

  void validate() const;
};

/// Instance weights driving the constraint sampler.
struct BoostState {
  std::vector<double> weights;
  double last_error_rate = 0.0;

  static BoostState uniform(std::size_t n);

  /// Multiplies the weight of every misclassified instance by (1 + error_rate)
  /// and renormalises to sum 1.
  void update(const std::vector<bool>& misclassified, double error_rate);
};

/// True iff the predicted label set differs from the truth in any label.
bool sample_is_misclassified(const LabelSet& predicted, const LabelSet& truth);

struct EnsembleMember {
  ProjectionModel projection;
  MlknnModel classifier;
};

struct IterationLog {
  double error_rate = 0.0;
  std::size_t reduced_dim = 0;
  std::size_t must_count = 0;
  std::size_t cannot_count = 0;
};

struct VpcmeModel {
  Method method = Method::kVpcme;
  VpcmeConfig config;
  std::size_t feature_count = 0;
  std::size_t label_count = 0;
  std::vector<EnsembleMember> members;
  std::vector<IterationLog> training_log;
};

struct EnsemblePrediction {
  LabelSet bipartition;
  std::vector<double> scores;
};

/// Called after each member is trained with its index and the weights the
/// next member will sample with.
using TrainingObserver = std::function<void(std::size_t member, const BoostState& state)>;

/// Trains config.ensemble_size members. Each round samples constraints with
/// the current weights, fits the projection, fits MLKNN on the projected
/// training data and, when boosting is enabled, upweights the instances the
/// member gets wrong on the training set. Member l draws from a generator
/// seeded with derive_seed(config.seed, l).
VpcmeModel train_vpcme(const MultiLabelDataset& ds, const VpcmeConfig& config,
                       const TrainingObserver& observer = {});

/// A one-member model holding plain MLKNN over the unprojected features.
VpcmeModel train_single_mlknn(const MultiLabelDataset& ds, std::size_t k_neighbors, double smoothing);

/// Dispatches on `method`; config.boosting_enabled is overridden to match it.
VpcmeModel train_model(const MultiLabelDataset& ds, Method method, VpcmeConfig config);

/// Majority vote over member bipartitions (score > 0.5); an even split is
/// settled by the mean score being above 0.5. Scores are member averages.
EnsemblePrediction combine_member_scores(std::span<const std::vector<double>> member_scores);

EnsemblePrediction predict_ensemble(const VpcmeModel& model, const Eigen::VectorXd& x);

/// Predictions for every row of an n x k matrix.
std::vector<EnsemblePrediction> predict_ensemble(const VpcmeModel& model, const Eigen::MatrixXd& rows);

}  // namespace vpcme
