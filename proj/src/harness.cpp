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

#include "vpcme/harness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "vpcme/errors.hpp"
#include "vpcme/random.hpp"

#ifndef VPCME_VERSION
#define VPCME_VERSION "0.0.0"
#endif

namespace vpcme {

namespace {

using nlohmann::ordered_json;

constexpr const char* kReportSchema = "vpcme.report/1";

MetricSet evaluate_unit(const MultiLabelDataset& ds, const ExperimentConfig& cfg, const FoldAssignment& split,
                        std::size_t repeat, std::size_t fold) {
  const auto train_idx = split.train_indices(fold);
  const auto test_idx = split.test_indices(fold);
  for (auto t : test_idx) {
    if (std::binary_search(train_idx.begin(), train_idx.end(), t)) {
      throw std::logic_error("instance " + std::to_string(t) + " appears in its own training fold");
    }
  }

  MultiLabelDataset train = ds.subset(train_idx);
  MultiLabelDataset test = ds.subset(test_idx);
  if (cfg.zscore) standardize(train.features, test.features);

  VpcmeConfig vcfg = cfg.vpcme;
  vcfg.seed = unit_seed(cfg.master_seed, repeat, fold);
  const VpcmeModel model = train_model(train, cfg.method, vcfg);
  const auto predictions = predict_ensemble(model, test.features);

  std::vector<LabelSet> predicted;
  std::vector<std::vector<double>> scores;
  predicted.reserve(predictions.size());
  scores.reserve(predictions.size());
  for (const auto& p : predictions) {
    predicted.push_back(p.bipartition);
    scores.push_back(p.scores);
  }
  return evaluate_all(test.labels, predicted, scores);
}

}  // namespace

std::string_view version() { return "vpcme " VPCME_VERSION; }

void ExperimentConfig::validate() const {
  if (folds < 2) throw ConfigError("folds must be at least 2");
  if (repeats < 1) throw ConfigError("repeats must be at least 1");
  vpcme.validate();
}

std::uint64_t repeat_seed(std::uint64_t master_seed, std::size_t repeat) {
  return derive_seed(master_seed, repeat);
}

std::uint64_t unit_seed(std::uint64_t master_seed, std::size_t repeat, std::size_t fold) {
  return derive_seed(repeat_seed(master_seed, repeat), 1 + fold);
}

void check_fold_capacity(std::size_t n, std::size_t folds, std::size_t k_neighbors) {
  if (folds < 2 || folds > n) {
    throw ConfigError("cannot split " + std::to_string(n) + " instances into " + std::to_string(folds) + " folds");
  }
  const std::size_t largest_fold = (n + folds - 1) / folds;
  const std::size_t smallest_train = n - largest_fold;
  if (smallest_train <= k_neighbors || smallest_train < 2) {
    throw ConfigError("training folds hold only " + std::to_string(smallest_train) +
                      " instances, need more than k=" + std::to_string(k_neighbors));
  }
}

void standardize(Eigen::MatrixXd& train, Eigen::MatrixXd& test) {
  if (train.rows() == 0) return;
  const Eigen::RowVectorXd mean = train.colwise().mean();
  Eigen::RowVectorXd scale(train.cols());
  for (Eigen::Index c = 0; c < train.cols(); ++c) {
    const double var = train.rows() > 1
                           ? (train.col(c).array() - mean(c)).square().sum() / static_cast<double>(train.rows() - 1)
                           : 0.0;
    scale(c) = var > 0.0 ? std::sqrt(var) : 1.0;
  }
  train = (train.rowwise() - mean).array().rowwise() / scale.array();
  test = (test.rowwise() - mean).array().rowwise() / scale.array();
}

CvResult cross_validate(const MultiLabelDataset& ds, const ExperimentConfig& cfg) {
  cfg.validate();
  ds.validate();
  if (cfg.label_count != 0 && cfg.label_count != ds.label_count()) {
    throw ConfigError("config expects " + std::to_string(cfg.label_count) + " labels, dataset has " +
                      std::to_string(ds.label_count()));
  }
  check_fold_capacity(ds.instance_count(), cfg.folds, cfg.vpcme.k_neighbors);

  CvResult result;
  for (std::size_t repeat = 0; repeat < cfg.repeats; ++repeat) {
    const FoldAssignment split = kfold_split(ds.instance_count(), cfg.folds, repeat_seed(cfg.master_seed, repeat));
    for (std::size_t fold = 0; fold < cfg.folds; ++fold) {
      result.units.push_back({repeat, fold, evaluate_unit(ds, cfg, split, repeat, fold)});
    }
  }
  std::vector<MetricSet> sets;
  sets.reserve(result.units.size());
  for (const auto& u : result.units) sets.push_back(u.metrics);
  result.report = summarize(sets);
  return result;
}

CvResult cross_validate(const ExperimentConfig& cfg) {
  if (cfg.label_count == 0) throw ConfigError("--labels must be positive");
  return cross_validate(load_csv(cfg.data_path, cfg.label_count), cfg);
}

SweepSpec SweepSpec::defaults(SweepParameter parameter) {
  SweepSpec spec;
  spec.parameter = parameter;
  if (parameter == SweepParameter::kTheta) {
    for (int i = 1; i <= 10; ++i) spec.values.push_back(i / 10.0);
  } else {
    spec.values = {1, 10, 20, 30, 40, 50};
  }
  return spec;
}

void SweepSpec::validate() const {
  if (values.empty()) throw ConfigError("sweep needs at least one value");
  for (double v : values) {
    if (parameter == SweepParameter::kTheta && !(v >= 0.0 && v <= 1.0)) {
      throw ConfigError("theta sweep values must lie in [0, 1]");
    }
    if (parameter == SweepParameter::kEnsembleSize && !(v >= 1.0 && v == std::floor(v))) {
      throw ConfigError("ensemble sizes must be positive integers");
    }
  }
}

std::string_view sweep_parameter_name(SweepParameter parameter) {
  return parameter == SweepParameter::kTheta ? "theta" : "ensemble_size";
}

std::vector<SweepPoint> run_sweep(const MultiLabelDataset& ds, const ExperimentConfig& cfg, const SweepSpec& spec) {
  spec.validate();
  std::vector<SweepPoint> out;
  for (double v : spec.values) {
    ExperimentConfig point_cfg = cfg;
    if (spec.parameter == SweepParameter::kTheta) {
      point_cfg.vpcme.theta = v;
    } else {
      point_cfg.vpcme.ensemble_size = static_cast<std::size_t>(v);
    }
    out.push_back({v, cross_validate(ds, point_cfg)});
  }
  return out;
}

ComparisonReport compare_methods(const MultiLabelDataset& ds, std::span<const ExperimentConfig> configs) {
  if (configs.empty()) throw ConfigError("nothing to compare");
  const auto& ref = configs.front();
  for (const auto& c : configs) {
    if (c.folds != ref.folds || c.repeats != ref.repeats || c.master_seed != ref.master_seed ||
        c.zscore != ref.zscore || c.data_path != ref.data_path || c.label_count != ref.label_count) {
      throw ConfigError("compared configurations must share data, folds, repeats, seed and scaling");
    }
  }

  ComparisonReport report;
  for (const auto& c : configs) {
    MethodComparison row;
    row.config = c;
    row.result = cross_validate(ds, c);
    report.rows.push_back(std::move(row));
  }

  const CvResult& reference = report.rows.front().result;
  for (std::size_t r = 1; r < report.rows.size(); ++r) {
    auto& row = report.rows[r];
    for (Metric m : kAllMetrics) {
      std::vector<double> a;
      std::vector<double> b;
      for (std::size_t u = 0; u < reference.units.size(); ++u) {
        const auto& va = reference.units[u].metrics[m];
        const auto& vb = row.result.units[u].metrics[m];
        if (va && vb) {
          a.push_back(va->value);
          b.push_back(vb->value);
        }
      }
      if (a.size() < 2) continue;
      const auto idx = static_cast<std::size_t>(m);
      const PairedTTest test = paired_t_test(a, b);
      row.tests[idx] = test;
      if (test.significant) {
        const bool reference_lower = test.mean_difference < 0.0;
        row.markers[idx] = reference_lower == lower_is_better(m) ? "•" : "◦";
      }
    }
  }
  return report;
}

ordered_json config_json(const ExperimentConfig& cfg) {
  ordered_json j = {
      {"data", cfg.data_path.string()},
      {"labels", cfg.label_count},
      {"method", std::string(method_name(cfg.method))},
      {"theta", cfg.vpcme.theta},
      {"ensemble_size", cfg.vpcme.ensemble_size},
      {"k", cfg.vpcme.k_neighbors},
      {"smoothing", cfg.vpcme.smoothing},
      {"folds", cfg.folds},
      {"repeats", cfg.repeats},
      {"seed", cfg.master_seed},
      {"zscore", cfg.zscore},
  };
  return j;
}

ordered_json metrics_json(const EvaluationReport& report) {
  ordered_json j = ordered_json::object();
  for (Metric m : kAllMetrics) {
    const auto& s = report[m];
    j[std::string(metric_name(m))] = {{"mean", s.mean},   {"std", s.std},
                                      {"skipped", s.skipped}, {"units", s.units},
                                      {"undefined_units", s.undefined_units}};
  }
  return j;
}

namespace {

ordered_json header(const char* command) {
  return {{"schema", kReportSchema}, {"command", command}, {"version", std::string(version())}};
}

ordered_json protocol_json(const ExperimentConfig& cfg, std::size_t units) {
  return {{"fold_reshuffle_per_repeat", true}, {"units", units}, {"folds", cfg.folds}, {"repeats", cfg.repeats}};
}

}  // namespace

ordered_json cv_report_json(const ExperimentConfig& cfg, const CvResult& result) {
  ordered_json j = header("cv");
  j["config"] = config_json(cfg);
  j["protocol"] = protocol_json(cfg, result.units.size());
  j["metrics"] = metrics_json(result.report);
  return j;
}

ordered_json sweep_report_json(const ExperimentConfig& cfg, const SweepSpec& spec, std::span<const SweepPoint> points) {
  ordered_json j = header(spec.parameter == SweepParameter::kTheta ? "sweep-theta" : "sweep-size");
  j["config"] = config_json(cfg);
  j["parameter"] = std::string(sweep_parameter_name(spec.parameter));
  ordered_json results = ordered_json::array();
  for (const auto& p : points) {
    results.push_back({{"value", p.value}, {"units", p.result.units.size()}, {"metrics", metrics_json(p.result.report)}});
  }
  j["results"] = std::move(results);
  return j;
}

ordered_json comparison_report_json(const ComparisonReport& report) {
  ordered_json j = header("compare");
  if (!report.rows.empty()) {
    j["config"] = config_json(report.rows.front().config);
    j["reference"] = std::string(method_name(report.rows.front().config.method));
  }
  ordered_json rows = ordered_json::array();
  for (const auto& row : report.rows) {
    ordered_json metrics = metrics_json(row.result.report);
    for (Metric m : kAllMetrics) {
      const auto idx = static_cast<std::size_t>(m);
      auto& entry = metrics[std::string(metric_name(m))];
      entry["marker"] = row.markers[idx];
      if (row.tests[idx]) {
        const auto& t = *row.tests[idx];
        entry["t_test"] = {{"t", std::isfinite(t.t) ? ordered_json(t.t) : ordered_json(t.t > 0 ? "inf" : "-inf")},
                           {"df", t.df},
                           {"significant", t.significant}};
      } else {
        entry["t_test"] = nullptr;
      }
    }
    rows.push_back({{"method", std::string(method_name(row.config.method))},
                    {"theta", row.config.vpcme.theta},
                    {"ensemble_size", row.config.vpcme.ensemble_size},
                    {"units", row.result.units.size()},
                    {"metrics", std::move(metrics)}});
  }
  j["rows"] = std::move(rows);
  return j;
}

ordered_json stats_report_json(const std::filesystem::path& path, const DatasetStats& stats) {
  ordered_json j = header("stats");
  j["data"] = path.string();
  j["stats"] = {{"instances", stats.instances}, {"features", stats.features},       {"labels", stats.labels},
                {"distinct", stats.distinct},   {"cardinality", stats.cardinality}, {"density", stats.density}};
  return j;
}

}  // namespace vpcme
