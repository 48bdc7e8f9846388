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
#include <sstream>

#include <gtest/gtest.h>

#include "support/synthetic.hpp"
#include "vpcme/errors.hpp"
#include "vpcme/model_io.hpp"

namespace vpcme {
namespace {

std::string serialized(const VpcmeModel& model) {
  std::ostringstream out;
  write_model(model, out);
  return out.str();
}

VpcmeConfig small_config(std::size_t size, std::uint64_t seed) {
  VpcmeConfig cfg;
  cfg.ensemble_size = size;
  cfg.k_neighbors = 5;
  cfg.seed = seed;
  return cfg;
}

TEST(SampleIsMisclassified, ExactSetMatch) {
  EXPECT_FALSE(sample_is_misclassified({true, true, false}, {true, true, false}));
  EXPECT_TRUE(sample_is_misclassified({true, false, false}, {true, true, false}));
  EXPECT_FALSE(sample_is_misclassified({false, false}, {false, false}));
}

TEST(BoostState, WorkedUpdate) {
  auto state = BoostState::uniform(4);
  state.update({true, false, false, false}, 0.25);
  EXPECT_NEAR(state.weights[0], 0.2941, 1e-4);
  for (std::size_t i = 1; i < 4; ++i) EXPECT_NEAR(state.weights[i], 0.2353, 1e-4);
  EXPECT_NEAR(std::accumulate(state.weights.begin(), state.weights.end(), 0.0), 1.0, 1e-12);
}

TEST(BoostState, ZeroErrorLeavesWeights) {
  auto state = BoostState::uniform(5);
  const auto before = state.weights;
  state.update({false, false, false, false, false}, 0.0);
  EXPECT_EQ(state.weights, before);
}

TEST(BoostState, RandomUpdatesStayNormalisedAndMonotone) {
  Rng rng(3);
  auto state = BoostState::uniform(30);
  for (int step = 0; step < 200; ++step) {
    std::vector<bool> wrong(30);
    std::size_t errors = 0;
    for (std::size_t i = 0; i < 30; ++i) errors += (wrong[i] = rng.uniform() < 0.3);
    const double theta = static_cast<double>(errors) / 30.0;
    const auto before = state.weights;
    state.update(wrong, theta);
    EXPECT_NEAR(std::accumulate(state.weights.begin(), state.weights.end(), 0.0), 1.0, 1e-9);
    for (std::size_t i = 0; i < 30; ++i) {
      EXPECT_GE(state.weights[i], 0.0);
      for (std::size_t j = 0; j < 30; ++j) {
        if (theta > 0 && wrong[i] && !wrong[j] && before[i] == before[j]) EXPECT_GT(state.weights[i], state.weights[j]);
      }
    }
  }
}

TEST(CombineMemberScores, MajorityVote) {
  const std::vector<std::vector<double>> votes = {{0.9, 0.2}, {0.6, 0.3}, {0.1, 0.8}};
  const auto p = combine_member_scores(votes);
  EXPECT_EQ(p.bipartition, (LabelSet{true, false}));
  EXPECT_NEAR(p.scores[0], 1.6 / 3.0, 1e-15);
}

TEST(CombineMemberScores, EvenSplitFallsBackToMeanScore) {
  EXPECT_EQ(combine_member_scores(std::vector<std::vector<double>>{{0.9}, {0.3}}).bipartition, LabelSet{true});
  EXPECT_EQ(combine_member_scores(std::vector<std::vector<double>>{{0.6}, {0.3}}).bipartition, LabelSet{false});
  EXPECT_EQ(combine_member_scores(std::vector<std::vector<double>>{{0.75}, {0.25}}).bipartition, LabelSet{false});
}

TEST(CombineMemberScores, SingleMemberIsIdentity) {
  const std::vector<std::vector<double>> one = {{0.7, 0.5, 0.2}};
  const auto p = combine_member_scores(one);
  EXPECT_EQ(p.scores, one.front());
  EXPECT_EQ(p.bipartition, (LabelSet{true, false, false}));
}

TEST(TrainVpcme, EnsembleOfOneMatchesMember) {
  const auto ds = testing::linear_labels_dataset(80, 0.1, 4);
  const auto model = train_vpcme(ds, small_config(1, 9));
  ASSERT_EQ(model.members.size(), 1u);
  const auto& member = model.members.front();
  Rng rng(1);
  for (int q = 0; q < 20; ++q) {
    Eigen::VectorXd x(8);
    for (Eigen::Index c = 0; c < 8; ++c) x(c) = rng.normal();
    const auto p = predict_ensemble(model, x);
    const auto z = transform(member.projection, x);
    EXPECT_EQ(p.scores, posterior_scores(member.classifier, z));
    EXPECT_EQ(p.bipartition, predict_bipartition(member.classifier, z));
  }
}

TEST(TrainVpcme, MembersAndLogConsistent) {
  const auto ds = testing::linear_labels_dataset(60, 0.1, 5);
  const auto model = train_vpcme(ds, small_config(4, 2));
  ASSERT_EQ(model.members.size(), 4u);
  ASSERT_EQ(model.training_log.size(), 4u);
  for (std::size_t l = 0; l < 4; ++l) {
    const auto& m = model.members[l];
    EXPECT_EQ(m.classifier.dim(), m.projection.reduced_dim());
    EXPECT_EQ(model.training_log[l].reduced_dim, m.projection.reduced_dim());
    EXPECT_LE(model.training_log[l].must_count, 60u);
    EXPECT_LE(model.training_log[l].cannot_count, 60u);
    EXPECT_GE(model.training_log[l].error_rate, 0.0);
    EXPECT_LE(model.training_log[l].error_rate, 1.0);
  }
}

TEST(TrainVpcme, WeightsStayNormalised) {
  const auto ds = testing::linear_labels_dataset(60, 0.1, 6);
  std::size_t calls = 0;
  train_vpcme(ds, small_config(6, 1), [&](std::size_t, const BoostState& s) {
    ++calls;
    EXPECT_NEAR(std::accumulate(s.weights.begin(), s.weights.end(), 0.0), 1.0, 1e-9);
    for (double w : s.weights) EXPECT_GE(w, 0.0);
  });
  EXPECT_EQ(calls, 6u);
}

TEST(TrainVpcme, BaggingKeepsUniformWeights) {
  const auto ds = testing::linear_labels_dataset(60, 0.1, 7);
  auto cfg = small_config(5, 3);
  cfg.boosting_enabled = false;
  const auto uniform = BoostState::uniform(60).weights;
  const auto model = train_vpcme(ds, cfg, [&](std::size_t, const BoostState& s) { EXPECT_EQ(s.weights, uniform); });
  EXPECT_EQ(model.method, Method::kBaggingVpcp);
}

TEST(TrainVpcme, BoostingChangesWeightsWhenErrorsOccur) {
  const auto ds = testing::linear_labels_dataset(60, 0.2, 8);
  const auto uniform = BoostState::uniform(60).weights;
  bool moved = false;
  train_vpcme(ds, small_config(3, 4), [&](std::size_t, const BoostState& s) {
    if (s.last_error_rate > 0) moved = moved || s.weights != uniform;
  });
  EXPECT_TRUE(moved);
}

TEST(TrainVpcme, DeterministicForSeed) {
  const auto ds = testing::linear_labels_dataset(70, 0.1, 9);
  const auto a = train_vpcme(ds, small_config(5, 17));
  const auto b = train_vpcme(ds, small_config(5, 17));
  EXPECT_EQ(serialized(a), serialized(b));
  const auto c = train_vpcme(ds, small_config(5, 18));
  EXPECT_NE(serialized(a), serialized(c));
}

TEST(TrainVpcme, ExtremeThetasComplete) {
  const auto ds = testing::linear_labels_dataset(50, 0.1, 10);
  for (double theta : {0.0, 1.0}) {
    auto cfg = small_config(3, 5);
    cfg.theta = theta;
    const auto model = train_vpcme(ds, cfg);
    EXPECT_EQ(model.members.size(), 3u);
    if (theta == 0.0) EXPECT_EQ(model.training_log[0].cannot_count, 0u);
  }
}

TEST(TrainVpcme, RejectsTooFewInstances) {
  const auto ds = testing::linear_labels_dataset(5, 0.0, 1);
  EXPECT_THROW(train_vpcme(ds, small_config(2, 0)), ConfigError);
  auto cfg = small_config(0, 0);
  EXPECT_THROW(train_vpcme(testing::linear_labels_dataset(30, 0.0, 1), cfg), ConfigError);
}

TEST(TrainModel, SingleMlknnUsesIdentityProjection) {
  const auto ds = testing::linear_labels_dataset(40, 0.1, 11);
  const auto model = train_model(ds, Method::kMlknnSingle, small_config(30, 0));
  ASSERT_EQ(model.members.size(), 1u);
  EXPECT_EQ(model.method, Method::kMlknnSingle);
  const auto direct = fit_mlknn(ds.features, ds.labels, 5, 1.0);
  const Eigen::VectorXd x = ds.features.row(3).transpose();
  EXPECT_EQ(predict_ensemble(model, x).scores, posterior_scores(direct, x));
}

TEST(PredictEnsemble, RejectsWrongWidth) {
  const auto ds = testing::linear_labels_dataset(40, 0.1, 12);
  const auto model = train_vpcme(ds, small_config(2, 0));
  EXPECT_THROW(predict_ensemble(model, Eigen::VectorXd(Eigen::VectorXd::Zero(3))), ValidationError);
}

TEST(Method, NamesRoundTrip) {
  for (auto m : {Method::kVpcme, Method::kBaggingVpcp, Method::kMlknnSingle}) EXPECT_EQ(parse_method(method_name(m)), m);
  EXPECT_THROW(parse_method("rakel"), ConfigError);
}

}  // namespace
}  // namespace vpcme
