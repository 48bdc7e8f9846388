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

#include "vpcme/ensemble.hpp"

#include <numeric>
#include <string>

#include "vpcme/constraints.hpp"
#include "vpcme/errors.hpp"
#include "vpcme/random.hpp"

namespace vpcme {

std::string_view method_name(Method method) {
  switch (method) {
    case Method::kVpcme:
      return "vpcme";
    case Method::kBaggingVpcp:
      return "bagging_vpcp";
    case Method::kMlknnSingle:
      return "mlknn_single";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "vpcme") return Method::kVpcme;
  if (name == "bagging_vpcp") return Method::kBaggingVpcp;
  if (name == "mlknn_single") return Method::kMlknnSingle;
  throw ConfigError("unknown method '" + std::string(name) + "' (expected vpcme, bagging_vpcp or mlknn_single)");
}

void VpcmeConfig::validate() const {
  if (ensemble_size < 1) throw ConfigError("ensemble size must be at least 1");
  if (!(theta >= 0.0 && theta <= 1.0)) throw ConfigError("theta must lie in [0, 1]");
  if (k_neighbors < 1) throw ConfigError("k must be at least 1");
  if (!(smoothing > 0.0)) throw ConfigError("smoothing must be positive");
}

BoostState BoostState::uniform(std::size_t n) {
  BoostState state;
  state.weights.assign(n, 1.0 / static_cast<double>(n));
  return state;
}

void BoostState::update(const std::vector<bool>& misclassified, double error_rate) {
  if (misclassified.size() != weights.size()) throw ValidationError("misclassification mask has wrong length");
  if (!(error_rate >= 0.0 && error_rate <= 1.0)) throw ValidationError("error rate must lie in [0, 1]");
  last_error_rate = error_rate;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (misclassified[i]) weights[i] *= 1.0 + error_rate;
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (auto& w : weights) w /= total;
}

bool sample_is_misclassified(const LabelSet& predicted, const LabelSet& truth) { return predicted != truth; }

VpcmeModel train_vpcme(const MultiLabelDataset& ds, const VpcmeConfig& config, const TrainingObserver& observer) {
  config.validate();
  ds.validate();
  const std::size_t n = ds.instance_count();
  if (n < 2 || n < config.k_neighbors + 1) {
    throw ConfigError("training needs more than k=" + std::to_string(config.k_neighbors) + " instances, got " +
                      std::to_string(n));
  }

  ConstraintConfig constraint_cfg = ConstraintConfig::defaults_for(n, config.theta);
  constraint_cfg.target_must = config.target_must.value_or(n);
  constraint_cfg.target_cannot = config.target_cannot.value_or(n);
  constraint_cfg.max_attempts = 50 * (constraint_cfg.target_must + constraint_cfg.target_cannot);

  VpcmeModel model;
  model.method = config.boosting_enabled ? Method::kVpcme : Method::kBaggingVpcp;
  model.config = config;
  model.feature_count = ds.feature_count();
  model.label_count = ds.label_count();
  model.members.reserve(config.ensemble_size);

  BoostState boost = BoostState::uniform(n);
  std::vector<bool> wrong(n);
  for (std::size_t l = 0; l < config.ensemble_size; ++l) {
    Rng rng(derive_seed(config.seed, l));
    const PairConstraintSets sets = sample_constraints(ds, boost.weights, constraint_cfg, rng);

    EnsembleMember member;
    member.projection = fit_projection(ds.features, sets);
    const Eigen::MatrixXd projected = transform(member.projection, ds.features);
    member.classifier = fit_mlknn(projected, ds.labels, config.k_neighbors, config.smoothing);

    std::size_t errors = 0;
    Eigen::VectorXd z(projected.cols());
    for (std::size_t i = 0; i < n; ++i) {
      z = projected.row(static_cast<Eigen::Index>(i)).transpose();
      wrong[i] = sample_is_misclassified(predict_bipartition(member.classifier, z), ds.labels[i]);
      errors += wrong[i];
    }
    const double error_rate = static_cast<double>(errors) / static_cast<double>(n);
    if (config.boosting_enabled) {
      boost.update(wrong, error_rate);
    } else {
      boost.last_error_rate = error_rate;
    }

    model.training_log.push_back(
        {error_rate, member.projection.reduced_dim(), sets.must.size(), sets.cannot.size()});
    model.members.push_back(std::move(member));
    if (observer) observer(l, boost);
  }
  return model;
}

VpcmeModel train_single_mlknn(const MultiLabelDataset& ds, std::size_t k_neighbors, double smoothing) {
  ds.validate();
  VpcmeModel model;
  model.method = Method::kMlknnSingle;
  model.config.ensemble_size = 1;
  model.config.k_neighbors = k_neighbors;
  model.config.smoothing = smoothing;
  model.config.boosting_enabled = false;
  model.feature_count = ds.feature_count();
  model.label_count = ds.label_count();

  EnsembleMember member;
  member.projection = identity_projection(ds.feature_count());
  member.classifier = fit_mlknn(ds.features, ds.labels, k_neighbors, smoothing);
  model.members.push_back(std::move(member));
  model.training_log.push_back({0.0, ds.feature_count(), 0, 0});
  return model;
}

VpcmeModel train_model(const MultiLabelDataset& ds, Method method, VpcmeConfig config) {
  switch (method) {
    case Method::kMlknnSingle: {
      config.validate();
      VpcmeModel model = train_single_mlknn(ds, config.k_neighbors, config.smoothing);
      model.config.seed = config.seed;
      model.config.theta = config.theta;
      return model;
    }
    case Method::kBaggingVpcp:
      config.boosting_enabled = false;
      return train_vpcme(ds, config);
    case Method::kVpcme:
      config.boosting_enabled = true;
      return train_vpcme(ds, config);
  }
  throw ConfigError("unknown method");
}

EnsemblePrediction combine_member_scores(std::span<const std::vector<double>> member_scores) {
  if (member_scores.empty()) throw ValidationError("no member scores to combine");
  const std::size_t labels = member_scores.front().size();
  const std::size_t members = member_scores.size();

  EnsemblePrediction out;
  out.scores.assign(labels, 0.0);
  out.bipartition.assign(labels, false);
  std::vector<std::size_t> votes(labels, 0);
  for (const auto& scores : member_scores) {
    if (scores.size() != labels) throw ValidationError("member score vectors differ in length");
    for (std::size_t l = 0; l < labels; ++l) {
      out.scores[l] += scores[l];
      votes[l] += scores[l] > 0.5;
    }
  }
  for (std::size_t l = 0; l < labels; ++l) {
    out.scores[l] /= static_cast<double>(members);
    if (2 * votes[l] > members) {
      out.bipartition[l] = true;
    } else if (2 * votes[l] == members) {
      out.bipartition[l] = out.scores[l] > 0.5;
    }
  }
  return out;
}

EnsemblePrediction predict_ensemble(const VpcmeModel& model, const Eigen::VectorXd& x) {
  if (static_cast<std::size_t>(x.size()) != model.feature_count) {
    throw ValidationError("model expects " + std::to_string(model.feature_count) + " features, got " +
                          std::to_string(x.size()));
  }
  std::vector<std::vector<double>> member_scores;
  member_scores.reserve(model.members.size());
  for (const auto& member : model.members) {
    member_scores.push_back(posterior_scores(member.classifier, transform(member.projection, x)));
  }
  return combine_member_scores(member_scores);
}

std::vector<EnsemblePrediction> predict_ensemble(const VpcmeModel& model, const Eigen::MatrixXd& rows) {
  std::vector<EnsemblePrediction> out;
  out.reserve(static_cast<std::size_t>(rows.rows()));
  Eigen::VectorXd x(rows.cols());
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    x = rows.row(i).transpose();
    out.push_back(predict_ensemble(model, x));
  }
  return out;
}

}  // namespace vpcme
