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

#include "vpcme/constraints.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vpcme/errors.hpp"

namespace vpcme {

ConstraintConfig ConstraintConfig::defaults_for(std::size_t n, double theta) {
  ConstraintConfig cfg;
  cfg.theta = theta;
  cfg.target_must = n;
  cfg.target_cannot = n;
  cfg.max_attempts = 50 * (cfg.target_must + cfg.target_cannot);
  return cfg;
}

void ConstraintConfig::validate() const {
  if (!(theta >= 0.0 && theta <= 1.0)) throw ConfigError("theta must lie in [0, 1]");
  if (max_attempts < target_must + target_cannot) {
    throw ConfigError("max_attempts must be at least target_must + target_cannot");
  }
}

double label_overlap_ratio(const LabelSet& a, const LabelSet& b) {
  if (a.size() != b.size()) throw ValidationError("label sets come from different label universes");
  std::size_t shared = 0;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
  for (std::size_t l = 0; l < a.size(); ++l) {
    size_a += a[l];
    size_b += b[l];
    shared += a[l] && b[l];
  }
  if (size_a + size_b == 0) return 1.0;
  return static_cast<double>(shared) / (static_cast<double>(size_a + size_b) / 2.0);
}

WeightedIndexSampler::WeightedIndexSampler(std::span<const double> weights) {
  cumulative_.reserve(weights.size());
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw ValidationError("weights must be finite and non-negative");
    if (w > 0.0) ++positive_;
    total += w;
    cumulative_.push_back(total);
  }
  if (!(total > 0.0)) throw ValidationError("weights must have positive total");
}

std::size_t WeightedIndexSampler::draw(Rng& rng) const {
  const double target = rng.uniform() * cumulative_.back();
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
  if (it == cumulative_.end()) {
    // target rounded up to the total; fall back to the last positive weight.
    --it;
    while (it != cumulative_.begin() && *it == *(it - 1)) --it;
  }
  return static_cast<std::size_t>(it - cumulative_.begin());
}

PairConstraintSets sample_constraints(const MultiLabelDataset& ds, std::span<const double> weights,
                                      const ConstraintConfig& cfg, Rng& rng) {
  cfg.validate();
  const std::size_t n = ds.instance_count();
  if (n < 2) throw ConfigError("constraint sampling needs at least 2 instances");
  if (weights.size() != n) throw ValidationError("weight vector length differs from instance count");
  double total = 0.0;
  for (double w : weights) total += w;
  if (std::abs(total - 1.0) > 1e-9) throw ValidationError("weights must sum to 1");
  WeightedIndexSampler sampler(weights);
  if (sampler.positive_count() < 2) {
    throw ConfigError("constraint sampling needs at least 2 instances with positive weight");
  }

  PairConstraintSets sets;
  sets.must.reserve(cfg.target_must);
  sets.cannot.reserve(cfg.target_cannot);
  for (std::size_t attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    if (sets.must.size() >= cfg.target_must && sets.cannot.size() >= cfg.target_cannot) break;
    const std::size_t i = sampler.draw(rng);
    std::size_t j = sampler.draw(rng);
    while (j == i) j = sampler.draw(rng);
    const double ratio = label_overlap_ratio(ds.labels[i], ds.labels[j]);
    if (is_must_link(ratio, cfg.theta)) {
      if (sets.must.size() < cfg.target_must) sets.must.emplace_back(i, j);
    } else if (sets.cannot.size() < cfg.target_cannot) {
      sets.cannot.emplace_back(i, j);
    }
  }
  return sets;
}

}  // namespace vpcme
