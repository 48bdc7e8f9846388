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

#include "vpcme/eigen_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "vpcme/errors.hpp"

namespace vpcme {

namespace {

constexpr double kSymmetryTolerance = 1e-8;
constexpr double kRelativeOffDiagonal = 1e-10;
constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const Eigen::MatrixXd& a) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

// Zeroes a(p, q) with a plane rotation, updating a and the accumulated
// eigenvector matrix v in place.
void rotate(Eigen::MatrixXd& a, Eigen::MatrixXd& v, Eigen::Index p, Eigen::Index q) {
  const double apq = a(p, q);
  const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& input) {
  if (input.rows() != input.cols()) throw ValidationError("eigen solver needs a square matrix");
  if (!input.allFinite()) throw ValidationError("eigen solver input has non-finite entries");
  if (input.size() > 0 && (input - input.transpose()).cwiseAbs().maxCoeff() > kSymmetryTolerance) {
    throw ValidationError("eigen solver input is not symmetric");
  }

  const Eigen::Index n = input.rows();
  Eigen::MatrixXd a = 0.5 * (input + input.transpose());
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double threshold = kRelativeOffDiagonal * input.norm();

  int sweeps = 0;
  while (sweeps < kMaxSweeps && off_diagonal_norm(a) > threshold) {
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) != 0.0) rotate(a, v, p, q);
      }
    }
    ++sweeps;
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) { return a(x, x) > a(y, y); });

  SymmetricEigen out;
  out.sweeps = sweeps;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    const Eigen::Index src = order[static_cast<std::size_t>(c)];
    out.values(c) = a(src, src);
    Eigen::VectorXd col = v.col(src);
    Eigen::Index pivot = 0;
    for (Eigen::Index k = 1; k < n; ++k) {
      if (std::abs(col(k)) > std::abs(col(pivot))) pivot = k;
    }
    if (col(pivot) < 0.0) col = -col;
    out.vectors.col(c) = col;
  }
  return out;
}

}  // namespace vpcme
