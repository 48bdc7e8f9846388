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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "vpcme/dataset.hpp"

namespace vpcme {

/// rank[l] is the 1-based position of label l; 1 is the most relevant.
using Ranking = std::vector<std::size_t>;

/// Higher score gets the smaller rank; equal scores go to the lower label
/// index first. Throws ValidationError on an empty or non-finite input.
Ranking rank_from_scores(std::span<const double> scores);

/// A metric averaged over the instances it is defined for.
struct MetricValue {
  double value = 0.0;
  std::size_t evaluated = 0;  // instances contributing to the average
  std::size_t skipped = 0;    // instances with a degenerate label set
};

// All metrics throw ValidationError on mismatched list lengths or widths and
// UndefinedInputError when no instance can be evaluated.

MetricValue hamming_loss(std::span<const LabelSet> truths, std::span<const LabelSet> predicted);
/// Skips instances whose relevant set is empty or complete.
MetricValue ranking_loss(std::span<const LabelSet> truths, std::span<const Ranking> ranks);
/// Skips instances with no relevant label.
MetricValue one_error(std::span<const LabelSet> truths, std::span<const Ranking> ranks);
/// Instances with no relevant label contribute 0.
MetricValue coverage(std::span<const LabelSet> truths, std::span<const Ranking> ranks);
/// Skips instances with no relevant label.
MetricValue average_precision(std::span<const LabelSet> truths, std::span<const Ranking> ranks);
/// Two empty sets score 1.
MetricValue f1_metric(std::span<const LabelSet> truths, std::span<const LabelSet> predicted);
/// Empty truth scores 1 against an empty prediction and is skipped otherwise.
MetricValue recall(std::span<const LabelSet> truths, std::span<const LabelSet> predicted);

enum class Metric {
  kHammingLoss,
  kRankingLoss,
  kOneError,
  kCoverage,
  kAveragePrecision,
  kF1,
  kRecall,
};

inline constexpr std::size_t kMetricCount = 7;
inline constexpr std::array<Metric, kMetricCount> kAllMetrics = {
    Metric::kHammingLoss, Metric::kRankingLoss,      Metric::kOneError, Metric::kCoverage,
    Metric::kAveragePrecision, Metric::kF1, Metric::kRecall};

std::string_view metric_name(Metric metric);
bool lower_is_better(Metric metric);

/// All seven metrics on one evaluation unit; nullopt where undefined.
struct MetricSet {
  std::array<std::optional<MetricValue>, kMetricCount> values;

  const std::optional<MetricValue>& operator[](Metric m) const { return values[static_cast<std::size_t>(m)]; }
  std::optional<MetricValue>& operator[](Metric m) { return values[static_cast<std::size_t>(m)]; }
};

/// Evaluates every metric, ranking labels by `scores`.
MetricSet evaluate_all(std::span<const LabelSet> truths, std::span<const LabelSet> predicted,
                       std::span<const std::vector<double>> scores);

struct MetricSummary {
  double mean = 0.0;
  double std = 0.0;               // sample standard deviation over units
  std::size_t skipped = 0;        // degenerate instances summed over units
  std::size_t units = 0;          // units with a defined value
  std::size_t undefined_units = 0;
};

/// Per-metric mean and spread across evaluation units (folds x repeats).
struct EvaluationReport {
  std::array<MetricSummary, kMetricCount> metrics;

  const MetricSummary& operator[](Metric m) const { return metrics[static_cast<std::size_t>(m)]; }
};

/// Aggregates in the order given; callers pass units sorted by key.
EvaluationReport summarize(std::span<const MetricSet> units);

}  // namespace vpcme
