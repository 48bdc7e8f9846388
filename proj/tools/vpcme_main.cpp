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

// Command-line front end: dataset statistics, cross-validation, sweeps,
// method comparison, model training and prediction.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vpcme/dataset.hpp"
#include "vpcme/ensemble.hpp"
#include "vpcme/errors.hpp"
#include "vpcme/harness.hpp"
#include "vpcme/model_io.hpp"

namespace {

struct Options {
  std::string data;
  std::size_t labels = 0;
  std::string method = "vpcme";
  double theta = 0.6;
  std::size_t ensemble_size = 30;
  std::size_t k = 10;
  double smoothing = 1.0;
  std::size_t folds = 5;
  std::size_t repeats = 20;
  std::uint64_t seed = 0;
  bool zscore = false;
  bool timing = false;
  std::string out;
  std::string model;
  std::vector<double> values;
  std::vector<std::string> methods = {"vpcme", "bagging_vpcp", "mlknn_single"};
};

void add_data_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--data", o.data, "Dataset CSV (features then 0/1 label columns)")->required();
  cmd->add_option("--labels", o.labels, "Number of trailing label columns")->required();
}

void add_learner_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--method", o.method, "vpcme | bagging_vpcp | mlknn_single")->capture_default_str();
  cmd->add_option("--theta", o.theta, "Must-link overlap threshold")->capture_default_str();
  cmd->add_option("--ensemble-size", o.ensemble_size, "Number of members")->capture_default_str();
  cmd->add_option("--k", o.k, "MLKNN neighbours")->capture_default_str();
  cmd->add_option("--smoothing", o.smoothing, "MLKNN Laplace smoothing")->capture_default_str();
  cmd->add_option("--seed", o.seed, "Master seed")->capture_default_str();
  cmd->add_option("--out", o.out, "Output file (default: stdout)");
}

void add_cv_options(CLI::App* cmd, Options& o) {
  add_data_options(cmd, o);
  add_learner_options(cmd, o);
  cmd->add_option("--folds", o.folds, "Cross-validation folds")->capture_default_str();
  cmd->add_option("--repeats", o.repeats, "Repeats of the fold split")->capture_default_str();
  cmd->add_flag("--zscore", o.zscore, "Standardise features per training fold");
  cmd->add_flag("--timing", o.timing, "Add wall time to the report (breaks byte-identical reruns)");
}

vpcme::ExperimentConfig experiment(const Options& o) {
  vpcme::ExperimentConfig cfg;
  cfg.data_path = o.data;
  cfg.label_count = o.labels;
  cfg.method = vpcme::parse_method(o.method);
  cfg.vpcme.theta = o.theta;
  cfg.vpcme.ensemble_size = o.ensemble_size;
  cfg.vpcme.k_neighbors = o.k;
  cfg.vpcme.smoothing = o.smoothing;
  cfg.vpcme.seed = o.seed;
  cfg.folds = o.folds;
  cfg.repeats = o.repeats;
  cfg.master_seed = o.seed;
  cfg.zscore = o.zscore;
  cfg.output_path = o.out;
  cfg.validate();
  return cfg;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw vpcme::ParseError("cannot write " + path);
  out << text;
}

void emit_json(nlohmann::ordered_json doc, const Options& o, std::chrono::steady_clock::time_point start) {
  if (o.timing) {
    doc["wall_time_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  emit(doc.dump(2) + "\n", o.out);
}

// Accepts either bare feature rows or rows followed by the model's label columns.
Eigen::MatrixXd read_prediction_input(const std::string& path, const vpcme::VpcmeModel& model) {
  std::ifstream in(path);
  if (!in) throw vpcme::ParseError("cannot open " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto values = vpcme::parse_csv_row(line, line_number);
    if (values.size() != model.feature_count && values.size() != model.feature_count + model.label_count) {
      throw vpcme::ParseError(path + ": line " + std::to_string(line_number) + " has " +
                              std::to_string(values.size()) + " columns, model expects " +
                              std::to_string(model.feature_count) + " features");
    }
    values.resize(model.feature_count);
    rows.push_back(std::move(values));
  }
  Eigen::MatrixXd x(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(model.feature_count));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < model.feature_count; ++c) {
      x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = rows[i][c];
    }
  }
  return x;
}

std::string predictions_csv(const vpcme::VpcmeModel& model, const Eigen::MatrixXd& x) {
  std::ostringstream out;
  out.precision(17);
  out << "instance";
  for (std::size_t l = 0; l < model.label_count; ++l) out << ",score_" << l;
  for (std::size_t l = 0; l < model.label_count; ++l) out << ",label_" << l;
  out << '\n';
  const auto predictions = vpcme::predict_ensemble(model, x);
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    out << i;
    for (double s : predictions[i].scores) out << ',' << s;
    for (bool b : predictions[i].bipartition) out << ',' << (b ? 1 : 0);
    out << '\n';
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-label ensemble learning with variable pairwise constraint projection"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(vpcme::version()));
  Options o;

  auto* stats = app.add_subcommand("stats", "Print dataset statistics");
  stats->add_option("data,--data", o.data, "Dataset CSV")->required();
  stats->add_option("--labels", o.labels, "Number of trailing label columns")->required();
  stats->add_option("--out", o.out, "Output file (default: stdout)");

  auto* cv = app.add_subcommand("cv", "Repeated k-fold cross-validation");
  add_cv_options(cv, o);

  auto* sweep_theta = app.add_subcommand("sweep-theta", "Cross-validate over a list of thresholds");
  add_cv_options(sweep_theta, o);
  sweep_theta->add_option("--values", o.values, "Threshold values (default 0.1..1.0)")->delimiter(',');

  auto* sweep_size = app.add_subcommand("sweep-size", "Cross-validate over a list of ensemble sizes");
  add_cv_options(sweep_size, o);
  sweep_size->add_option("--values", o.values, "Ensemble sizes (default 1,10,20,30,40,50)")->delimiter(',');

  auto* compare = app.add_subcommand("compare", "Compare methods on identical splits with paired t-tests");
  add_cv_options(compare, o);
  compare->add_option("--methods", o.methods, "Methods, the first is the reference")->delimiter(',');

  auto* train = app.add_subcommand("train", "Train on the whole dataset and save the model");
  add_data_options(train, o);
  add_learner_options(train, o);
  train->get_option("--out")->required()->description("Model file to write");

  auto* predict = app.add_subcommand("predict", "Score instances with a saved model (CSV output)");
  predict->add_option("--model", o.model, "Model file")->required();
  predict->add_option("--data", o.data, "CSV of feature rows, optionally followed by label columns")->required();
  predict->add_option("--out", o.out, "Output CSV (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  const auto start = std::chrono::steady_clock::now();
  try {
    if (*stats) {
      const auto ds = vpcme::load_csv(o.data, o.labels);
      emit(vpcme::stats_report_json(o.data, vpcme::compute_stats(ds)).dump(2) + "\n", o.out);
    } else if (*cv) {
      const auto cfg = experiment(o);
      emit_json(vpcme::cv_report_json(cfg, vpcme::cross_validate(cfg)), o, start);
    } else if (*sweep_theta || *sweep_size) {
      const auto cfg = experiment(o);
      const auto parameter = *sweep_theta ? vpcme::SweepParameter::kTheta : vpcme::SweepParameter::kEnsembleSize;
      auto spec = vpcme::SweepSpec::defaults(parameter);
      if (!o.values.empty()) spec.values = o.values;
      const auto ds = vpcme::load_csv(cfg.data_path, cfg.label_count);
      const auto points = vpcme::run_sweep(ds, cfg, spec);
      emit_json(vpcme::sweep_report_json(cfg, spec, points), o, start);
    } else if (*compare) {
      std::vector<vpcme::ExperimentConfig> configs;
      for (const auto& name : o.methods) {
        Options mo = o;
        mo.method = name;
        configs.push_back(experiment(mo));
      }
      const auto ds = vpcme::load_csv(configs.front().data_path, configs.front().label_count);
      emit_json(vpcme::comparison_report_json(vpcme::compare_methods(ds, configs)), o, start);
    } else if (*train) {
      const auto cfg = experiment(o);
      const auto ds = vpcme::load_csv(cfg.data_path, cfg.label_count);
      const auto model = vpcme::train_model(ds, cfg.method, cfg.vpcme);
      vpcme::save_model(model, o.out);
      std::cerr << "trained " << vpcme::method_name(model.method) << " with " << model.members.size()
                << " member(s) on " << ds.instance_count() << " instances -> " << o.out << "\n";
    } else if (*predict) {
      const auto model = vpcme::load_model(o.model);
      emit(predictions_csv(model, read_prediction_input(o.data, model)), o.out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
