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

#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "support/synthetic.hpp"
#include "vpcme/errors.hpp"

namespace vpcme {
namespace {

// Three labels, truth {0, 2}, scores rank them 0 > 1 > 2, prediction {0, 1}.
struct Worked {
  std::vector<LabelSet> y{{true, false, true}};
  std::vector<LabelSet> z{{true, true, false}};
  std::vector<Ranking> r{{1, 2, 3}};
};

TEST(RankFromScores, OrdersDescendingWithIndexTieBreak) {
  const std::vector<double> s = {0.2, 0.9, 0.2, 0.5};
  EXPECT_EQ(rank_from_scores(s), (Ranking{3, 1, 4, 2}));
  const std::vector<double> flat = {0.5, 0.5, 0.5};
  EXPECT_EQ(rank_from_scores(flat), (Ranking{1, 2, 3}));
}

TEST(RankFromScores, RejectsBadInput) {
  EXPECT_THROW(rank_from_scores(std::vector<double>{}), ValidationError);
  EXPECT_THROW(rank_from_scores(std::vector<double>{0.1, std::nan("")}), ValidationError);
}

TEST(Metrics, WorkedExample) {
  Worked w;
  EXPECT_DOUBLE_EQ(hamming_loss(w.y, w.z).value, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(ranking_loss(w.y, w.r).value, 0.5);
  EXPECT_DOUBLE_EQ(one_error(w.y, w.r).value, 0.0);
  EXPECT_DOUBLE_EQ(coverage(w.y, w.r).value, 2.0);
  EXPECT_DOUBLE_EQ(average_precision(w.y, w.r).value, 5.0 / 6.0);
  EXPECT_DOUBLE_EQ(f1_metric(w.y, w.z).value, 0.5);
  EXPECT_DOUBLE_EQ(recall(w.y, w.z).value, 0.5);
}

TEST(Metrics, EmptySetsAgree) {
  const std::vector<LabelSet> e{{false, false, false}};
  EXPECT_DOUBLE_EQ(f1_metric(e, e).value, 1.0);
  EXPECT_DOUBLE_EQ(recall(e, e).value, 1.0);
  EXPECT_DOUBLE_EQ(hamming_loss(e, e).value, 0.0);
}

TEST(Metrics, SkipRules) {
  const std::vector<LabelSet> y{{false, false}, {true, true}, {true, false}};
  const std::vector<Ranking> r{{1, 2}, {1, 2}, {2, 1}};
  const auto rl = ranking_loss(y, r);
  EXPECT_EQ(rl.evaluated, 1u);
  EXPECT_EQ(rl.skipped, 2u);
  EXPECT_DOUBLE_EQ(rl.value, 1.0);
  EXPECT_EQ(one_error(y, r).skipped, 1u);
  EXPECT_EQ(average_precision(y, r).skipped, 1u);
  const auto cov = coverage(y, r);
  EXPECT_EQ(cov.evaluated, 3u);
  EXPECT_DOUBLE_EQ(cov.value, (0.0 + 1.0 + 1.0) / 3.0);

  const std::vector<LabelSet> z{{true, false}, {true, true}, {true, false}};
  const auto rc = recall(y, z);
  EXPECT_EQ(rc.skipped, 1u);
  EXPECT_DOUBLE_EQ(rc.value, 1.0);
}

TEST(Metrics, UndefinedWhenNothingEvaluable) {
  const std::vector<LabelSet> y{{false, false}};
  const std::vector<Ranking> r{{1, 2}};
  EXPECT_THROW(ranking_loss(y, r), UndefinedInputError);
  EXPECT_THROW(one_error(y, r), UndefinedInputError);
  EXPECT_THROW(average_precision(y, r), UndefinedInputError);
  EXPECT_THROW(recall(y, std::vector<LabelSet>{{true, false}}), UndefinedInputError);
}

TEST(Metrics, RejectsShapeMismatch) {
  const std::vector<LabelSet> y{{true, false}};
  EXPECT_THROW(hamming_loss(y, std::vector<LabelSet>{}), ValidationError);
  EXPECT_THROW(hamming_loss(y, std::vector<LabelSet>{{true}}), ValidationError);
  EXPECT_THROW(ranking_loss(y, std::vector<Ranking>{{1, 2, 3}}), ValidationError);
}

// Random instances against the bitmask oracles; also checks value ranges.
TEST(Metrics, MatchOraclesOnRandomInstances) {
  Rng rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 1 + rng.below(6), n = 1 + rng.below(8);
    const auto y = testing::random_label_sets(n, m, 0.4, rng);
    const auto z = testing::random_label_sets(n, m, 0.4, rng);
    std::vector<Ranking> r;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<double> s(m);
      for (auto& v : s) v = std::floor(rng.uniform() * 4) / 4;  // plenty of ties
      r.push_back(rank_from_scores(s));
    }
    auto check = [](double expected, auto compute, double lo, double hi) {
      if (std::isnan(expected)) {
        EXPECT_THROW(compute(), UndefinedInputError);
        return;
      }
      const double got = compute().value;
      EXPECT_NEAR(got, expected, 1e-12);
      EXPECT_GE(got, lo);
      EXPECT_LE(got, hi);
    };
    const double md = static_cast<double>(m);
    check(testing::oracle_hamming(y, z), [&] { return hamming_loss(y, z); }, 0, 1);
    check(testing::oracle_ranking_loss(y, r), [&] { return ranking_loss(y, r); }, 0, 1);
    check(testing::oracle_one_error(y, r), [&] { return one_error(y, r); }, 0, 1);
    check(testing::oracle_coverage(y, r), [&] { return coverage(y, r); }, 0, md - 1);
    check(testing::oracle_average_precision(y, r), [&] { return average_precision(y, r); }, 0, 1);
    check(testing::oracle_f1(y, z), [&] { return f1_metric(y, z); }, 0, 1);
    check(testing::oracle_recall(y, z), [&] { return recall(y, z); }, 0, 1);
  }
}

TEST(Metrics, PerfectPredictionIsOptimal) {
  Rng rng(5);
  const auto y = testing::random_label_sets(20, 5, 0.5, rng);
  std::vector<Ranking> r;
  for (const auto& row : y) {
    std::vector<double> s(row.size());
    for (std::size_t l = 0; l < row.size(); ++l) s[l] = row[l] ? 1.0 : 0.0;
    r.push_back(rank_from_scores(s));
  }
  EXPECT_EQ(hamming_loss(y, y).value, 0.0);
  EXPECT_EQ(ranking_loss(y, r).value, 0.0);
  EXPECT_EQ(one_error(y, r).value, 0.0);
  EXPECT_EQ(average_precision(y, r).value, 1.0);
  EXPECT_EQ(f1_metric(y, y).value, 1.0);
  EXPECT_EQ(recall(y, y).value, 1.0);
}

// Relabelling the label columns consistently leaves every metric unchanged.
TEST(Metrics, InvariantUnderLabelPermutation) {
  Rng rng(8);
  const std::size_t n = 15, m = 5;
  const auto y = testing::random_label_sets(n, m, 0.4, rng);
  const auto z = testing::random_label_sets(n, m, 0.4, rng);
  std::vector<std::vector<double>> s(n, std::vector<double>(m));
  for (auto& row : s) for (auto& v : row) v = rng.uniform();
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  shuffle(perm, rng);
  auto permute = [&](const auto& rows) {
    auto out = rows;
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t l = 0; l < m; ++l) out[i][perm[l]] = rows[i][l];
    return out;
  };
  const auto a = evaluate_all(y, z, s);
  const auto b = evaluate_all(permute(y), permute(z), permute(s));
  for (auto metric : kAllMetrics) {
    ASSERT_EQ(a[metric].has_value(), b[metric].has_value());
    if (a[metric]) EXPECT_NEAR(a[metric]->value, b[metric]->value, 1e-12) << metric_name(metric);
  }
}

TEST(EvaluateAll, MarksUndefinedMetrics) {
  const std::vector<LabelSet> y{{false, false}};
  const std::vector<LabelSet> z{{true, false}};
  const std::vector<std::vector<double>> s{{0.7, 0.1}};
  const auto set = evaluate_all(y, z, s);
  EXPECT_TRUE(set[Metric::kHammingLoss].has_value());
  EXPECT_TRUE(set[Metric::kCoverage].has_value());
  EXPECT_FALSE(set[Metric::kRankingLoss].has_value());
  EXPECT_FALSE(set[Metric::kRecall].has_value());
}

TEST(Summarize, SampleStdAndUndefinedUnits) {
  std::vector<MetricSet> units(3);
  const double vals[] = {0.1, 0.2, 0.3};
  for (int u = 0; u < 3; ++u) units[u][Metric::kHammingLoss] = MetricValue{vals[u], 4, 0};
  units[0][Metric::kOneError] = MetricValue{0.5, 3, 1};
  const auto report = summarize(units);
  EXPECT_NEAR(report[Metric::kHammingLoss].mean, 0.2, 1e-15);
  EXPECT_NEAR(report[Metric::kHammingLoss].std, 0.1, 1e-15);
  EXPECT_EQ(report[Metric::kHammingLoss].units, 3u);
  EXPECT_EQ(report[Metric::kOneError].units, 1u);
  EXPECT_EQ(report[Metric::kOneError].undefined_units, 2u);
  EXPECT_EQ(report[Metric::kOneError].skipped, 1u);
  EXPECT_EQ(report[Metric::kOneError].std, 0.0);
}

TEST(MetricNames, Directions) {
  EXPECT_TRUE(lower_is_better(Metric::kHammingLoss));
  EXPECT_TRUE(lower_is_better(Metric::kCoverage));
  EXPECT_FALSE(lower_is_better(Metric::kAveragePrecision));
  EXPECT_FALSE(lower_is_better(Metric::kRecall));
  EXPECT_EQ(metric_name(Metric::kF1), "f1");
}

}  // namespace
}  // namespace vpcme
