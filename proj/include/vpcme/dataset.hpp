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
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace vpcme {

/// Indicator vector over the label universe: entry l is true iff label l is
/// relevant.
using LabelSet = std::vector<bool>;

/// Number of relevant labels in a set.
std::size_t cardinality(const LabelSet& labels);

/// Dense multi-label data: n x k features and an n x r boolean label matrix.
///
/// Instances may carry an empty label set. Use make_dataset() or load_csv()
/// to obtain a validated instance.
struct MultiLabelDataset {
  Eigen::MatrixXd features;
  std::vector<LabelSet> labels;
  std::vector<std::string> label_names;

  std::size_t instance_count() const { return static_cast<std::size_t>(features.rows()); }
  std::size_t feature_count() const { return static_cast<std::size_t>(features.cols()); }
  std::size_t label_count() const { return label_names.size(); }

  /// Throws ValidationError when any structural invariant is broken.
  void validate() const;

  /// Rows in the given order, sharing feature and label layout.
  MultiLabelDataset subset(std::span<const std::size_t> rows) const;
};

/// Builds and validates a dataset; label names default to "label_<i>".
MultiLabelDataset make_dataset(Eigen::MatrixXd features, std::vector<LabelSet> labels,
                               std::vector<std::string> label_names = {});

/// Reads the dense CSV format: no header, features first, the trailing
/// `label_count` columns hold 0/1 labels. Throws ParseError naming the line.
MultiLabelDataset load_csv(const std::filesystem::path& path, std::size_t label_count);
MultiLabelDataset parse_csv(std::istream& in, std::size_t label_count);

/// Writes the same format with shortest round-trip number formatting.
void write_csv(const MultiLabelDataset& ds, std::ostream& out);
void save_csv(const MultiLabelDataset& ds, const std::filesystem::path& path);

/// Splits one CSV line into numeric fields. Throws ParseError on a
/// non-numeric or non-finite field.
std::vector<double> parse_csv_row(const std::string& line, std::size_t line_number);

struct DatasetStats {
  std::size_t instances = 0;
  std::size_t features = 0;
  std::size_t labels = 0;
  std::size_t distinct = 0;  // unique label combinations
  double cardinality = 0.0;  // mean labels per instance
  double density = 0.0;      // cardinality / labels
};

DatasetStats compute_stats(const MultiLabelDataset& ds);

/// Fold index of every instance for k-fold cross-validation.
struct FoldAssignment {
  std::vector<std::size_t> fold_of_instance;
  std::size_t folds = 0;
  std::uint64_t seed = 0;

  std::vector<std::size_t> test_indices(std::size_t fold) const;
  std::vector<std::size_t> train_indices(std::size_t fold) const;
  std::vector<std::size_t> fold_sizes() const;
};

/// Shuffles 0..n-1 with the seeded generator and deals the permutation
/// round-robin into `folds` parts. Requires 2 <= folds <= n.
FoldAssignment kfold_split(std::size_t n, std::size_t folds, std::uint64_t seed);

}  // namespace vpcme
