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

#include "vpcme/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "vpcme/errors.hpp"

namespace vpcme {

namespace {

template <typename T>
std::size_t check_lists(std::span<const LabelSet> truths, std::span<const T> other) {
  if (truths.size() != other.size()) throw ValidationError("metric inputs differ in length");
  if (truths.empty()) throw UndefinedInputError("metric over zero instances");
  const std::size_t m = truths.front().size();
  if (m == 0) throw ValidationError("empty label universe");
  for (std::size_t i = 0; i < truths.size(); ++i) {
    if (truths[i].size() != m || other[i].size() != m) throw ValidationError("label widths differ");
  }
  return m;
}

MetricValue finish(double sum, std::size_t evaluated, std::size_t skipped, const char* name) {
  if (evaluated == 0) throw UndefinedInputError(std::string(name) + ": every instance was skipped");
  return {sum / static_cast<double>(evaluated), evaluated, skipped};
}

std::size_t top_label(const Ranking& ranks) {
  return static_cast<std::size_t>(std::min_element(ranks.begin(), ranks.end()) - ranks.begin());
}

}  // namespace

Ranking rank_from_scores(std::span<const double> scores) {
  if (scores.empty()) throw ValidationError("cannot rank zero labels");
  for (double s : scores) {
    if (!std::isfinite(s)) throw ValidationError("cannot rank non-finite scores");
  }
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  Ranking ranks(scores.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) ranks[order[pos]] = pos + 1;
  return ranks;
}

MetricValue hamming_loss(std::span<const LabelSet> truths, std::span<const LabelSet> predicted) {
  const std::size_t m = check_lists(truths, predicted);
  double sum = 0.0;
  for (std::size_t i = 0; i < truths.size(); ++i) {
    std::size_t diff = 0;
    for (std::size_t l = 0; l < m; ++l) diff += truths[i][l] != predicted[i][l];
    sum += static_cast<double>(diff) / static_cast<double>(m);
  }
  return finish(sum, truths.size(), 0, "hamming_loss");
}

MetricValue ranking_loss(std::span<const LabelSet> truths, std::span<const Ranking> ranks) {
  const std::size_t m = check_lists(truths, ranks);
  double sum = 0.0;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < truths.size(); ++i) {
    const std::size_t relevant = cardinality(truths[i]);
    if (relevant == 0 || relevant == m) {
      ++skipped;
      continue;
    }
    std::size_t bad = 0;
    for (std::size_t a = 0; a < m; ++a) {
      if (!truths[i][a]) continue;
      for (std::size_t b = 0; b < m; ++b) {
        if (!truths[i][b] && ranks[i][a] > ranks[i][b]) ++bad;
      }
    }
    sum += static_cast<double>(bad) / static_cast<double>(relevant * (m - relevant));
    ++evaluated;
  }
  return finish(sum, evaluated, skipped, "ranking_loss");
}

MetricValue one_error(std::span<const LabelSet> truths, std::span<const Ranking> ranks) {
  check_lists(truths, ranks);
  double sum = 0.0;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < truths.size(); ++i) {
    if (cardinality(truths[i]) == 0) {
      ++skipped;
      continue;
    }
    sum += truths[i][top_label(ranks[i])] ? 0.0 : 1.0;
    ++evaluated;
  }
  return finish(sum, evaluated, skipped, "one_error");
}

MetricValue coverage(std::span<const LabelSet> truths, std::span<const Ranking> ranks) {
  const std::size_t m = check_lists(truths, ranks);
  double sum = 0.0;
  for (std::size_t i = 0; i < truths.size(); ++i) {
    std::size_t deepest = 0;
    for (std::size_t l = 0; l < m; ++l) {
      if (truths[i][l]) deepest = std::max(deepest, ranks[i][l]);
    }
    if (deepest > 0) sum += static_cast<double>(deepest - 1);
  }
  return finish(sum, truths.size(), 0, "coverage");
}

MetricValue average_precision(std::span<const LabelSet> truths, std::span<const Ranking> ranks) {
  const std::size_t m = check_lists(truths, ranks);
  double sum = 0.0;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < truths.size(); ++i) {
    const std::size_t relevant = cardinality(truths[i]);
    if (relevant == 0) {
      ++skipped;
      continue;
    }
    double inner = 0.0;
    for (std::size_t l = 0; l < m; ++l) {
      if (!truths[i][l]) continue;
      std::size_t above = 0;
      for (std::size_t o = 0; o < m; ++o) {
        if (truths[i][o] && ranks[i][o] <= ranks[i][l]) ++above;
      }
      inner += static_cast<double>(above) / static_cast<double>(ranks[i][l]);
    }
    sum += inner / static_cast<double>(relevant);
    ++evaluated;
  }
  return finish(sum, evaluated, skipped, "average_precision");
}

MetricValue f1_metric(std::span<const LabelSet> truths, std::span<const LabelSet> predicted) {
  const std::size_t m = check_lists(truths, predicted);
  double sum = 0.0;
  for (std::size_t i = 0; i < truths.size(); ++i) {
    std::size_t shared = 0;
    std::size_t total = 0;
    for (std::size_t l = 0; l < m; ++l) {
      shared += truths[i][l] && predicted[i][l];
      total += static_cast<std::size_t>(truths[i][l]) + static_cast<std::size_t>(predicted[i][l]);
    }
    sum += total == 0 ? 1.0 : 2.0 * static_cast<double>(shared) / static_cast<double>(total);
  }
  return finish(sum, truths.size(), 0, "f1");
}

MetricValue recall(std::span<const LabelSet> truths, std::span<const LabelSet> predicted) {
  const std::size_t m = check_lists(truths, predicted);
  double sum = 0.0;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < truths.size(); ++i) {
    const std::size_t relevant = cardinality(truths[i]);
    if (relevant == 0) {
      if (cardinality(predicted[i]) == 0) {
        sum += 1.0;
        ++evaluated;
      } else {
        ++skipped;
      }
      continue;
    }
    std::size_t shared = 0;
    for (std::size_t l = 0; l < m; ++l) shared += truths[i][l] && predicted[i][l];
    sum += static_cast<double>(shared) / static_cast<double>(relevant);
    ++evaluated;
  }
  return finish(sum, evaluated, skipped, "recall");
}

std::string_view metric_name(Metric metric) {
  switch (metric) {
    case Metric::kHammingLoss:
      return "hamming_loss";
    case Metric::kRankingLoss:
      return "ranking_loss";
    case Metric::kOneError:
      return "one_error";
    case Metric::kCoverage:
      return "coverage";
    case Metric::kAveragePrecision:
      return "average_precision";
    case Metric::kF1:
      return "f1";
    case Metric::kRecall:
      return "recall";
  }
  return "unknown";
}

bool lower_is_better(Metric metric) {
  return metric == Metric::kHammingLoss || metric == Metric::kRankingLoss || metric == Metric::kOneError ||
         metric == Metric::kCoverage;
}

MetricSet evaluate_all(std::span<const LabelSet> truths, std::span<const LabelSet> predicted,
                       std::span<const std::vector<double>> scores) {
  if (scores.size() != truths.size()) throw ValidationError("score list length differs from truths");
  std::vector<Ranking> ranks;
  ranks.reserve(scores.size());
  for (const auto& s : scores) ranks.push_back(rank_from_scores(s));

  MetricSet out;
  auto attempt = [&](Metric m, auto&& fn) {
    try {
      out[m] = fn();
    } catch (const UndefinedInputError&) {
      out[m] = std::nullopt;
    }
  };
  const std::span<const Ranking> rank_span(ranks);
  attempt(Metric::kHammingLoss, [&] { return hamming_loss(truths, predicted); });
  attempt(Metric::kRankingLoss, [&] { return ranking_loss(truths, rank_span); });
  attempt(Metric::kOneError, [&] { return one_error(truths, rank_span); });
  attempt(Metric::kCoverage, [&] { return coverage(truths, rank_span); });
  attempt(Metric::kAveragePrecision, [&] { return average_precision(truths, rank_span); });
  attempt(Metric::kF1, [&] { return f1_metric(truths, predicted); });
  attempt(Metric::kRecall, [&] { return recall(truths, predicted); });
  return out;
}

EvaluationReport summarize(std::span<const MetricSet> units) {
  EvaluationReport report;
  for (Metric m : kAllMetrics) {
    auto& summary = report.metrics[static_cast<std::size_t>(m)];
    std::vector<double> values;
    for (const auto& unit : units) {
      if (unit[m]) {
        values.push_back(unit[m]->value);
        summary.skipped += unit[m]->skipped;
      } else {
        ++summary.undefined_units;
      }
    }
    summary.units = values.size();
    if (values.empty()) continue;
    summary.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
    if (values.size() > 1) {
      double ss = 0.0;
      for (double v : values) ss += (v - summary.mean) * (v - summary.mean);
      summary.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
  }
  return report;
}

}  // namespace vpcme
