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

// Synthetic multi-label generators with known structure.

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "vpcme/dataset.hpp"
#include "vpcme/random.hpp"

namespace vpcme::testing {

inline Eigen::MatrixXd gaussian_features(std::size_t n, std::size_t k, Rng& rng) {
  Eigen::MatrixXd x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k));
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index c = 0; c < x.cols(); ++c) x(i, c) = rng.normal();
  }
  return x;
}

// Label l is the sign of feature l (n x k, k >= labels). Noise-free and
// linearly separable.
inline MultiLabelDataset sign_labels_dataset(std::size_t n, std::size_t k, std::size_t labels, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd x = gaussian_features(n, k, rng);
  std::vector<LabelSet> y(n, LabelSet(labels, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < labels; ++l) y[i][l] = x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(l)) > 0;
  }
  return make_dataset(std::move(x), std::move(y));
}

// Three labels driven by linear combinations of 8 Gaussian features, each
// label flipped independently with probability `noise`.
inline MultiLabelDataset linear_labels_dataset(std::size_t n, double noise, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd x = gaussian_features(n, 8, rng);
  std::vector<LabelSet> y(n, LabelSet(3, false));
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = x.row(static_cast<Eigen::Index>(i));
    const bool clean[3] = {r(0) + r(1) > 0, r(2) - r(0) > 0, r(3) + 0.5 * r(1) > 0};
    for (std::size_t l = 0; l < 3; ++l) y[i][l] = rng.uniform() < noise ? !clean[l] : clean[l];
  }
  return make_dataset(std::move(x), std::move(y));
}

// Four correlated labels from three informative features, plus
// `noise_features` high-variance irrelevant columns.
inline MultiLabelDataset correlated_labels_dataset(std::size_t n, std::size_t noise_features, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t k = 3 + noise_features;
  Eigen::MatrixXd x = gaussian_features(n, k, rng);
  for (Eigen::Index c = 3; c < x.cols(); ++c) x.col(c) *= 3.0;
  std::vector<LabelSet> y(n, LabelSet(4, false));
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = x.row(static_cast<Eigen::Index>(i));
    const bool a = r(0) > 0, b = r(1) > 0;
    y[i][0] = a;
    y[i][1] = b;
    y[i][2] = a && b;
    y[i][3] = r(2) + 0.5 * r(0) > 0;
  }
  return make_dataset(std::move(x), std::move(y));
}

// Uniform random label sets with the given density.
inline std::vector<LabelSet> random_label_sets(std::size_t n, std::size_t m, double density, Rng& rng) {
  std::vector<LabelSet> y(n, LabelSet(m, false));
  for (auto& row : y) {
    for (std::size_t l = 0; l < m; ++l) row[l] = rng.uniform() < density;
  }
  return y;
}

}  // namespace vpcme::testing
