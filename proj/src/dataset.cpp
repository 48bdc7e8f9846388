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

#include "vpcme/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <string_view>

#include "vpcme/errors.hpp"
#include "vpcme/random.hpp"

namespace vpcme {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

}  // namespace

std::size_t cardinality(const LabelSet& labels) {
  return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), true));
}

void MultiLabelDataset::validate() const {
  const auto n = instance_count();
  if (n < 1) throw ValidationError("dataset has no instances");
  if (feature_count() < 1) throw ValidationError("dataset has no feature columns");
  if (label_count() < 2) throw ValidationError("dataset needs at least 2 labels");
  if (labels.size() != n) {
    throw ValidationError("feature rows (" + std::to_string(n) + ") and label rows (" +
                          std::to_string(labels.size()) + ") differ");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (labels[i].size() != label_count()) {
      throw ValidationError("label row " + std::to_string(i) + " has wrong width");
    }
  }
  if (!features.allFinite()) throw ValidationError("feature matrix has non-finite entries");
}

MultiLabelDataset MultiLabelDataset::subset(std::span<const std::size_t> rows) const {
  MultiLabelDataset out;
  out.features.resize(static_cast<Eigen::Index>(rows.size()), features.cols());
  out.labels.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r] >= instance_count()) throw ValidationError("subset row index out of range");
    out.features.row(static_cast<Eigen::Index>(r)) = features.row(static_cast<Eigen::Index>(rows[r]));
    out.labels.push_back(labels[rows[r]]);
  }
  out.label_names = label_names;
  return out;
}

MultiLabelDataset make_dataset(Eigen::MatrixXd features, std::vector<LabelSet> labels,
                               std::vector<std::string> label_names) {
  MultiLabelDataset ds;
  ds.features = std::move(features);
  ds.labels = std::move(labels);
  if (label_names.empty()) {
    const std::size_t width = ds.labels.empty() ? 0 : ds.labels.front().size();
    for (std::size_t l = 0; l < width; ++l) label_names.push_back("label_" + std::to_string(l));
  }
  ds.label_names = std::move(label_names);
  ds.validate();
  return ds;
}

std::vector<double> parse_csv_row(const std::string& line, std::size_t line_number) {
  std::vector<double> values;
  std::size_t start = 0;
  std::size_t column = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    const std::string_view field =
        trim(std::string_view(line).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    ++column;
    double v = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    if (!field.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (field.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
      throw ParseError("line " + std::to_string(line_number) + ", column " + std::to_string(column) +
                       ": not a finite number: '" + std::string(field) + "'");
    }
    values.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return values;
}

MultiLabelDataset parse_csv(std::istream& in, std::size_t label_count) {
  if (label_count == 0) throw ConfigError("label count must be positive");
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_number = 0;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (trim(line).empty()) continue;
    auto values = parse_csv_row(line, line_number);
    if (rows.empty()) {
      width = values.size();
      if (label_count >= width) {
        throw ParseError("line " + std::to_string(line_number) + ": " + std::to_string(width) +
                         " columns leave no feature columns for " + std::to_string(label_count) +
                         " labels");
      }
    } else if (values.size() != width) {
      throw ParseError("line " + std::to_string(line_number) + ": expected " + std::to_string(width) +
                       " columns, found " + std::to_string(values.size()));
    }
    for (std::size_t c = width - label_count; c < width; ++c) {
      if (values[c] != 0.0 && values[c] != 1.0) {
        throw ParseError("line " + std::to_string(line_number) + ", column " + std::to_string(c + 1) +
                         ": label value must be 0 or 1");
      }
    }
    rows.push_back(std::move(values));
  }
  if (rows.empty()) throw ParseError("no data rows");

  const std::size_t k = width - label_count;
  Eigen::MatrixXd features(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(k));
  std::vector<LabelSet> labels(rows.size(), LabelSet(label_count, false));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t c = 0; c < k; ++c) {
      features(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = rows[i][c];
    }
    for (std::size_t l = 0; l < label_count; ++l) labels[i][l] = rows[i][k + l] == 1.0;
  }
  try {
    return make_dataset(std::move(features), std::move(labels));
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

MultiLabelDataset load_csv(const std::filesystem::path& path, std::size_t label_count) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return parse_csv(in, label_count);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_csv(const MultiLabelDataset& ds, std::ostream& out) {
  for (std::size_t i = 0; i < ds.instance_count(); ++i) {
    for (std::size_t c = 0; c < ds.feature_count(); ++c) {
      if (c > 0) out << ',';
      out << format_double(ds.features(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)));
    }
    for (bool v : ds.labels[i]) out << ',' << (v ? '1' : '0');
    out << '\n';
  }
}

void save_csv(const MultiLabelDataset& ds, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path.string());
  write_csv(ds, out);
}

DatasetStats compute_stats(const MultiLabelDataset& ds) {
  DatasetStats stats;
  stats.instances = ds.instance_count();
  stats.features = ds.feature_count();
  stats.labels = ds.label_count();
  std::set<LabelSet> combos(ds.labels.begin(), ds.labels.end());
  stats.distinct = combos.size();
  std::size_t total = 0;
  for (const auto& row : ds.labels) total += cardinality(row);
  stats.cardinality = stats.instances == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(stats.instances);
  stats.density = stats.labels == 0 ? 0.0 : stats.cardinality / static_cast<double>(stats.labels);
  return stats;
}

std::vector<std::size_t> FoldAssignment::test_indices(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fold_of_instance.size(); ++i) {
    if (fold_of_instance[i] == fold) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FoldAssignment::train_indices(std::size_t fold) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < fold_of_instance.size(); ++i) {
    if (fold_of_instance[i] != fold) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FoldAssignment::fold_sizes() const {
  std::vector<std::size_t> sizes(folds, 0);
  for (auto f : fold_of_instance) ++sizes[f];
  return sizes;
}

FoldAssignment kfold_split(std::size_t n, std::size_t folds, std::uint64_t seed) {
  if (folds < 2) throw ConfigError("need at least 2 folds");
  if (folds > n) {
    throw ConfigError("cannot split " + std::to_string(n) + " instances into " + std::to_string(folds) + " folds");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  shuffle(order, rng);

  FoldAssignment out;
  out.folds = folds;
  out.seed = seed;
  out.fold_of_instance.assign(n, 0);
  for (std::size_t p = 0; p < n; ++p) out.fold_of_instance[order[p]] = p % folds;
  return out;
}

}  // namespace vpcme
