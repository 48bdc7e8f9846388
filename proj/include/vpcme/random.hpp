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
#include <random>
#include <span>

namespace vpcme {

/// Seeded generator used for every stochastic choice in the library.
///
/// Only the raw engine output of std::mt19937_64 is consumed; the
/// conversions to doubles and bounded integers are done here so results are
/// identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Uniform integer in [0, bound). bound must be positive.
  std::size_t below(std::size_t bound);

  /// Standard normal deviate (Box-Muller, no cached second value).
  double normal();

 private:
  std::mt19937_64 engine_;
};

/// Mixes a base seed with a stream index (splitmix64 finalizer), giving
/// independent, reproducible seeds for sub-tasks.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// Fisher-Yates shuffle driven by Rng::below.
void shuffle(std::span<std::size_t> values, Rng& rng);

}  // namespace vpcme
