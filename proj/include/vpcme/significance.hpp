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

namespace vpcme {

struct PairedTTest {
  double t = 0.0;
  std::size_t df = 0;
  double mean_difference = 0.0;
  bool significant = false;  // two-tailed, alpha = 0.01
};

/// Two-tailed critical value of Student's t at alpha = 0.01. Tabulated for
/// df 1..200; larger df use the normal quantile 2.5758293.
double t_critical_001(std::size_t df);

/// Paired t-test on the differences a_i - b_i. With zero variance in the
/// differences the result is significant iff their mean is non-zero (t is
/// then reported as +/-infinity, or 0 for a zero mean).
///
/// Throws ValidationError on length mismatch or fewer than 2 pairs.
PairedTTest paired_t_test(std::span<const double> a, std::span<const double> b);

}  // namespace vpcme
