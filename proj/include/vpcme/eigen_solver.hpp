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

#include <Eigen/Dense>

namespace vpcme {

struct SymmetricEigen {
  Eigen::VectorXd values;   // descending
  Eigen::MatrixXd vectors;  // column i pairs with values(i)
  int sweeps = 0;
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix.
///
/// Iterates until the off-diagonal Frobenius norm is at most 1e-10 times the
/// Frobenius norm of the input (at most 100 sweeps). Eigenvalues are sorted
/// descending with ties kept in Jacobi output order, and every eigenvector
/// is flipped so that its largest-magnitude component (first one on ties) is
/// positive.
///
/// Throws ValidationError for non-square, non-finite, or asymmetric input
/// (max |a_ij - a_ji| above 1e-8).
SymmetricEigen symmetric_eigen(const Eigen::MatrixXd& a);

}  // namespace vpcme
