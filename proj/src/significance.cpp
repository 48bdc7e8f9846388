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

#include "vpcme/significance.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "vpcme/errors.hpp"

namespace vpcme {

namespace {

// t_{0.995, df} for df = 1..200 (two-tailed alpha = 0.01).
constexpr std::array<double, 200> kCritical = {
    63.656741, 9.924843, 5.840909, 4.604095, 4.032143,
    3.707428, 3.499483, 3.355387, 3.249836, 3.169273,
    3.105807, 3.054540, 3.012276, 2.976843, 2.946713,
    2.920782, 2.898231, 2.878440, 2.860935, 2.845340,
    2.831360, 2.818756, 2.807336, 2.796940, 2.787436,
    2.778715, 2.770683, 2.763262, 2.756386, 2.749996,
    2.744042, 2.738481, 2.733277, 2.728394, 2.723806,
    2.719485, 2.715409, 2.711558, 2.707913, 2.704459,
    2.701181, 2.698066, 2.695102, 2.692278, 2.689585,
    2.687013, 2.684556, 2.682204, 2.679952, 2.677793,
    2.675722, 2.673734, 2.671823, 2.669985, 2.668216,
    2.666512, 2.664870, 2.663287, 2.661759, 2.660283,
    2.658857, 2.657479, 2.656145, 2.654854, 2.653604,
    2.652394, 2.651220, 2.650081, 2.648977, 2.647905,
    2.646863, 2.645852, 2.644869, 2.643913, 2.642983,
    2.642078, 2.641198, 2.640340, 2.639505, 2.638691,
    2.637897, 2.637123, 2.636369, 2.635632, 2.634914,
    2.634212, 2.633527, 2.632858, 2.632204, 2.631565,
    2.630940, 2.630330, 2.629732, 2.629148, 2.628576,
    2.628016, 2.627468, 2.626931, 2.626405, 2.625891,
    2.625386, 2.624891, 2.624407, 2.623932, 2.623465,
    2.623008, 2.622560, 2.622120, 2.621688, 2.621265,
    2.620849, 2.620440, 2.620039, 2.619645, 2.619258,
    2.618878, 2.618504, 2.618137, 2.617776, 2.617421,
    2.617072, 2.616729, 2.616392, 2.616060, 2.615733,
    2.615412, 2.615096, 2.614785, 2.614479, 2.614177,
    2.613880, 2.613588, 2.613300, 2.613017, 2.612738,
    2.612463, 2.612192, 2.611925, 2.611662, 2.611403,
    2.611147, 2.610895, 2.610647, 2.610402, 2.610161,
    2.609923, 2.609688, 2.609456, 2.609228, 2.609003,
    2.608780, 2.608561, 2.608344, 2.608131, 2.607920,
    2.607712, 2.607506, 2.607304, 2.607103, 2.606906,
    2.606711, 2.606518, 2.606328, 2.606140, 2.605954,
    2.605770, 2.605589, 2.605410, 2.605233, 2.605058,
    2.604886, 2.604715, 2.604546, 2.604379, 2.604215,
    2.604052, 2.603891, 2.603731, 2.603574, 2.603418,
    2.603264, 2.603112, 2.602961, 2.602813, 2.602665,
    2.602520, 2.602376, 2.602233, 2.602092, 2.601952,
    2.601814, 2.601678, 2.601543, 2.601409, 2.601276,
    2.601145, 2.601016, 2.600887, 2.600760, 2.600634,
};

constexpr double kNormalQuantile = 2.5758293035489004;

}  // namespace

double t_critical_001(std::size_t df) {
  if (df == 0) throw ValidationError("t distribution needs df >= 1");
  if (df <= kCritical.size()) return kCritical[df - 1];
  return kNormalQuantile;
}

PairedTTest paired_t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw ValidationError("paired t-test needs samples of equal length");
  if (a.size() < 2) throw ValidationError("paired t-test needs at least 2 pairs");
  const std::size_t n = a.size();

  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) mean += a[i] - b[i];
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i] - mean;
    ss += d * d;
  }
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));

  PairedTTest out;
  out.df = n - 1;
  out.mean_difference = mean;
  if (sd == 0.0) {
    out.significant = mean != 0.0;
    out.t = mean == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), mean);
    return out;
  }
  out.t = mean / (sd / std::sqrt(static_cast<double>(n)));
  out.significant = std::abs(out.t) > t_critical_001(out.df);
  return out;
}

}  // namespace vpcme
