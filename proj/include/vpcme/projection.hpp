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

#include <Eigen/Dense>

#include "vpcme/constraints.hpp"

namespace vpcme {

/// Averaged outer products of pair differences for both constraint sets.
struct ScatterPair {
  Eigen::MatrixXd s_cannot;
  Eigen::MatrixXd s_must;
  std::size_t n_cannot = 0;
  std::size_t n_must = 0;
};

/// S = 1/(2 n_set) * sum over pairs of (x_i - x_j)(x_i - x_j)^T; an empty
/// set gives the zero matrix.
ScatterPair scatter_matrices(const Eigen::MatrixXd& features, const PairConstraintSets& sets);

/// Mean squared cannot-link distance over mean squared must-link distance.
/// Falls back to 1.0 when either set is empty or either mean is zero.
double scaling_coefficient(const Eigen::MatrixXd& features, const PairConstraintSets& sets);

/// Orthonormal projection onto the leading eigenvectors of S_C - r S_M.
struct ProjectionModel {
  Eigen::MatrixXd w;            // k x d, columns are projection vectors
  Eigen::VectorXd eigenvalues;  // d kept eigenvalues, descending
  double scaling_r = 1.0;
  double objective = 0.0;       // sum of kept eigenvalues

  std::size_t input_dim() const { return static_cast<std::size_t>(w.rows()); }
  std::size_t reduced_dim() const { return static_cast<std::size_t>(w.cols()); }
};

/// Keeps every eigenvector of S_C - r S_M whose eigenvalue is >= 0; when
/// all are negative keeps only the largest one.
ProjectionModel fit_projection(const Eigen::MatrixXd& features, const PairConstraintSets& sets);

/// W = I_k. Used for members that classify in the original feature space.
ProjectionModel identity_projection(std::size_t k);

/// z = W^T x for one instance.
Eigen::VectorXd transform(const ProjectionModel& model, const Eigen::VectorXd& x);
/// Row-wise z_i = W^T x_i: n x k -> n x d.
Eigen::MatrixXd transform(const ProjectionModel& model, const Eigen::MatrixXd& rows);

/// Tr(W^T A W).
double projected_trace(const Eigen::MatrixXd& w, const Eigen::MatrixXd& a);

}  // namespace vpcme
