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
#include <cstdlib>
#include <sstream>

#include <gtest/gtest.h>

#include "support/synthetic.hpp"
#include "vpcme/errors.hpp"

namespace vpcme {
namespace {

MultiLabelDataset parse(const std::string& text, std::size_t labels) {
  std::istringstream in(text);
  return parse_csv(in, labels);
}

std::string parse_error(const std::string& text, std::size_t labels) {
  try {
    parse(text, labels);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

TEST(LoadCsv, SplitsTrailingLabelColumns) {
  const auto ds = parse("1.0,2.0,1,0\n3.0,4.0,0,1\n", 2);
  EXPECT_EQ(ds.instance_count(), 2u);
  EXPECT_EQ(ds.feature_count(), 2u);
  EXPECT_EQ(ds.label_count(), 2u);
  EXPECT_DOUBLE_EQ(ds.features(1, 0), 3.0);
  EXPECT_EQ(ds.labels[0], (LabelSet{true, false}));
  EXPECT_EQ(ds.labels[1], (LabelSet{false, true}));
}

TEST(LoadCsv, ToleratesCrlfAndBlankLines) {
  const auto ds = parse("1.0,2.0,1,0\r\n\n3.0,-4e-2,0,1\r\n", 2);
  EXPECT_EQ(ds.instance_count(), 2u);
  EXPECT_DOUBLE_EQ(ds.features(1, 1), -0.04);
}

TEST(LoadCsv, NonNumericFeatureNamesLine) {
  const auto msg = parse_error("1.0,x,1,0\n", 2);
  EXPECT_NE(msg.find("line 1"), std::string::npos) << msg;
}

TEST(LoadCsv, RejectsNoFeatureColumns) {
  EXPECT_NE(parse_error("1,0,1\n", 3).find("no feature columns"), std::string::npos);
}

TEST(LoadCsv, RejectsRaggedRows) {
  const auto msg = parse_error("1,2,1,0\n1,1,0\n", 2);
  EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
}

TEST(LoadCsv, RejectsLabelOutsideZeroOne) {
  const auto msg = parse_error("1,2,1,0\n1,2,2,0\n", 2);
  EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
  EXPECT_NE(msg.find("0 or 1"), std::string::npos) << msg;
}

TEST(LoadCsv, RejectsNonFiniteAndEmpty) {
  EXPECT_FALSE(parse_error("1,inf,1,0\n", 2).empty());
  EXPECT_FALSE(parse_error("1,,1,0\n", 2).empty());
  EXPECT_FALSE(parse_error("", 2).empty());
}

TEST(LoadCsv, MissingFileIsParseError) {
  EXPECT_THROW(load_csv("/nonexistent/data.csv", 2), ParseError);
}

TEST(LoadCsv, AcceptsEmptyLabelSets) {
  const auto ds = parse("1,2,0,0\n3,4,0,0\n", 2);
  EXPECT_EQ(cardinality(ds.labels[0]), 0u);
}

TEST(LoadCsv, WriteReloadRoundTrip) {
  Rng rng(5);
  auto x = testing::gaussian_features(40, 5, rng);
  x *= 1e3;
  x(0, 0) = 1.0 / 3.0;
  x(1, 1) = -5e-300;
  auto ds = make_dataset(x, testing::random_label_sets(40, 4, 0.4, rng));
  std::stringstream buf;
  write_csv(ds, buf);
  const auto back = parse_csv(buf, 4);
  EXPECT_TRUE(back.features == ds.features);
  EXPECT_EQ(back.labels, ds.labels);
}

TEST(ComputeStats, HandCountedExample) {
  Eigen::MatrixXd x(3, 1);
  x << 0, 1, 2;
  const auto stats = compute_stats(make_dataset(x, {{true, false}, {true, false}, {false, true}}));
  EXPECT_EQ(stats.distinct, 2u);
  EXPECT_DOUBLE_EQ(stats.cardinality, 1.0);
  EXPECT_DOUBLE_EQ(stats.density, 0.5);
}

TEST(ComputeStats, AllZeroLabels) {
  Eigen::MatrixXd x(2, 1);
  x << 0, 1;
  const auto stats = compute_stats(make_dataset(x, {{false, false, false}, {false, false, false}}));
  EXPECT_EQ(stats.distinct, 1u);
  EXPECT_EQ(stats.cardinality, 0.0);
  EXPECT_EQ(stats.density, 0.0);
}

TEST(ComputeStats, DensityTimesLabelsIsCardinality) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const std::size_t n = 1 + rng.below(60), m = 2 + rng.below(9);
    const auto ds = make_dataset(testing::gaussian_features(n, 2, rng),
                                 testing::random_label_sets(n, m, rng.uniform(), rng));
    const auto s = compute_stats(ds);
    EXPECT_NEAR(s.density * static_cast<double>(s.labels), s.cardinality, 1e-12);
    EXPECT_LE(s.density, 1.0);
    EXPECT_LE(s.distinct, std::min<std::size_t>(n, std::size_t{1} << m));
  }
}

TEST(ComputeStats, YeastTableValuesWhenSupplied) {
  const char* path = std::getenv("VPCME_YEAST_CSV");
  if (path == nullptr) GTEST_SKIP() << "VPCME_YEAST_CSV not set";
  const auto s = compute_stats(load_csv(path, 14));
  EXPECT_NEAR(s.cardinality, 4.237, 1e-3);
  EXPECT_NEAR(s.density, 0.303, 1e-3);
}

TEST(MultiLabelDataset, ValidateRejectsBrokenShapes) {
  Eigen::MatrixXd x(2, 1);
  x << 0, 1;
  EXPECT_THROW(make_dataset(x, {{true, false}}), ValidationError);
  EXPECT_THROW(make_dataset(x, {{true}, {false}}), ValidationError);
  x(0, 0) = std::nan("");
  EXPECT_THROW(make_dataset(x, {{true, false}, {false, true}}), ValidationError);
}

TEST(KFoldSplit, TenIntoFive) {
  const auto split = kfold_split(10, 5, 3);
  std::vector<std::size_t> seen;
  for (std::size_t f = 0; f < 5; ++f) {
    const auto test = split.test_indices(f);
    EXPECT_EQ(test.size(), 2u);
    seen.insert(seen.end(), test.begin(), test.end());
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 0; i < 10; ++i) EXPECT_EQ(seen[i], i);
}

TEST(KFoldSplit, Deterministic) {
  EXPECT_EQ(kfold_split(37, 5, 11).fold_of_instance, kfold_split(37, 5, 11).fold_of_instance);
  EXPECT_NE(kfold_split(37, 5, 11).fold_of_instance, kfold_split(37, 5, 12).fold_of_instance);
}

TEST(KFoldSplit, SevenIntoFive) {
  auto sizes = kfold_split(7, 5, 0).fold_sizes();
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{2, 2, 1, 1, 1}));
}

// Exhaustive over small shapes: a round-robin deal leaves n % folds folds
// one larger than the rest, and train/test partition every index.
TEST(KFoldSplit, RoundRobinSizesExhaustive) {
  for (std::size_t n = 2; n <= 30; ++n) {
    for (std::size_t folds = 2; folds <= n; ++folds) {
      const auto split = kfold_split(n, folds, n * 31 + folds);
      const auto sizes = split.fold_sizes();
      std::size_t big = 0;
      for (auto s : sizes) {
        ASSERT_TRUE(s == n / folds || s == n / folds + 1);
        big += s == n / folds + 1;
      }
      ASSERT_EQ(big, n % folds);
      for (std::size_t f = 0; f < folds; ++f) {
        ASSERT_EQ(split.test_indices(f).size() + split.train_indices(f).size(), n);
      }
    }
  }
}

TEST(KFoldSplit, RejectsBadFoldCounts) {
  EXPECT_THROW(kfold_split(4, 5, 0), ConfigError);
  EXPECT_THROW(kfold_split(4, 1, 0), ConfigError);
}

}  // namespace
}  // namespace vpcme
