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
#include <span>
#include <utility>
#include <vector>

#include "vpcme/dataset.hpp"
#include "vpcme/random.hpp"

namespace vpcme {

/// Threshold and target sizes for one round of pair sampling.
struct ConstraintConfig {
  double theta = 0.6;
  std::size_t target_must = 0;
  std::size_t target_cannot = 0;
  std::size_t max_attempts = 0;

  /// Both targets equal to n and the attempt budget 50 * (n_M + n_C).
  static ConstraintConfig defaults_for(std::size_t n, double theta);

  void validate() const;
};

using IndexPair = std::pair<std::size_t, std::size_t>;

/// Must-link and cannot-link pairs as ordered instance index pairs.
/// Duplicates are allowed; i != j always holds.
struct PairConstraintSets {
  std::vector<IndexPair> must;
  std::vector<IndexPair> cannot;
};

/// |R_i ∩ R_j| / ((|R_i| + |R_j|) / 2), with two empty sets counting as
/// identical (1.0).
double label_overlap_ratio(const LabelSet& a, const LabelSet& b);

inline bool is_must_link(double overlap_ratio, double theta) { return overlap_ratio >= theta; }

/// Draws indices with probability proportional to a weight vector.
class WeightedIndexSampler {
 public:
  explicit WeightedIndexSampler(std::span<const double> weights);

  std::size_t draw(Rng& rng) const;
  std::size_t size() const { return cumulative_.size(); }
  std::size_t positive_count() const { return positive_; }

 private:
  std::vector<double> cumulative_;
  std::size_t positive_ = 0;
};

/// Samples ordered pairs (i, j), i != j, with both endpoints drawn
/// independently in proportion to `weights` (j is redrawn while it equals i),
/// and routes each pair into the must-link or cannot-link set by its label
/// overlap ratio against theta. Pairs headed for a full set are discarded.
/// Stops when both sets are full or after cfg.max_attempts draws.
///
/// Requires n >= 2, weights >= 0 summing to 1 (within 1e-9) and at least
/// two instances with positive weight.
PairConstraintSets sample_constraints(const MultiLabelDataset& ds, std::span<const double> weights,
                                      const ConstraintConfig& cfg, Rng& rng);

}  // namespace vpcme
