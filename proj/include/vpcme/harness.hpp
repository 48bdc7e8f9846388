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

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "vpcme/dataset.hpp"
#include "vpcme/ensemble.hpp"
#include "vpcme/metrics.hpp"
#include "vpcme/significance.hpp"

namespace vpcme {

/// Library version string, e.g. "vpcme 0.1.0".
std::string_view version();

struct ExperimentConfig {
  std::filesystem::path data_path;
  std::size_t label_count = 0;
  Method method = Method::kVpcme;
  VpcmeConfig vpcme;
  std::size_t folds = 5;
  std::size_t repeats = 20;
  std::uint64_t master_seed = 0;
  bool zscore = false;
  std::filesystem::path output_path;

  void validate() const;
};

/// Metrics of one (repeat, fold) evaluation unit.
struct UnitResult {
  std::size_t repeat = 0;
  std::size_t fold = 0;
  MetricSet metrics;
};

struct CvResult {
  std::vector<UnitResult> units;  // sorted by (repeat, fold)
  EvaluationReport report;
};

/// Seed of the fold split for one repeat; folds are reshuffled every repeat.
std::uint64_t repeat_seed(std::uint64_t master_seed, std::size_t repeat);
/// Seed handed to the learner trained in one evaluation unit.
std::uint64_t unit_seed(std::uint64_t master_seed, std::size_t repeat, std::size_t fold);

/// Throws ConfigError unless every training fold of an n-instance split
/// holds more than k_neighbors instances.
void check_fold_capacity(std::size_t n, std::size_t folds, std::size_t k_neighbors);

/// Column-wise z-score using statistics of `train` only; constant columns
/// are centred but not scaled.
void standardize(Eigen::MatrixXd& train, Eigen::MatrixXd& test);

/// Repeated k-fold cross-validation of cfg.method on `ds`.
CvResult cross_validate(const MultiLabelDataset& ds, const ExperimentConfig& cfg);
/// Loads cfg.data_path first.
CvResult cross_validate(const ExperimentConfig& cfg);

enum class SweepParameter { kTheta, kEnsembleSize };

struct SweepSpec {
  SweepParameter parameter = SweepParameter::kTheta;
  std::vector<double> values;

  /// theta: 0.1, 0.2, ..., 1.0; ensemble size: 1, 10, 20, 30, 40, 50.
  static SweepSpec defaults(SweepParameter parameter);
  void validate() const;
};

std::string_view sweep_parameter_name(SweepParameter parameter);

struct SweepPoint {
  double value = 0.0;
  CvResult result;
};

/// One cross-validation per sweep value, everything else held fixed.
std::vector<SweepPoint> run_sweep(const MultiLabelDataset& ds, const ExperimentConfig& cfg, const SweepSpec& spec);

struct MethodComparison {
  ExperimentConfig config;
  CvResult result;
  /// Test of the reference (first) method against this one, per metric.
  std::array<std::optional<PairedTTest>, kMetricCount> tests;
  /// "•" where the reference is significantly better, "◦" where it is
  /// significantly worse, empty otherwise or on the reference row.
  std::array<std::string, kMetricCount> markers;
};

struct ComparisonReport {
  std::vector<MethodComparison> rows;
};

/// Runs every config on the same splits and tests each against the first.
/// Configs must agree on data, label count, folds, repeats, seed and
/// standardisation; otherwise ConfigError.
ComparisonReport compare_methods(const MultiLabelDataset& ds, std::span<const ExperimentConfig> configs);

// JSON reports. Every document carries "schema": "vpcme.report/1",
// "command", "version" and is deterministic for a fixed configuration.
nlohmann::ordered_json config_json(const ExperimentConfig& cfg);
nlohmann::ordered_json metrics_json(const EvaluationReport& report);
nlohmann::ordered_json cv_report_json(const ExperimentConfig& cfg, const CvResult& result);
nlohmann::ordered_json sweep_report_json(const ExperimentConfig& cfg, const SweepSpec& spec,
                                         std::span<const SweepPoint> points);
nlohmann::ordered_json comparison_report_json(const ComparisonReport& report);
nlohmann::ordered_json stats_report_json(const std::filesystem::path& path, const DatasetStats& stats);

}  // namespace vpcme
