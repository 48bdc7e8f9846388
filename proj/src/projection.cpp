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

#include "vpcme/projection.hpp"

#include <string>

#include "vpcme/eigen_solver.hpp"
#include "vpcme/errors.hpp"

namespace vpcme {

namespace {

void check_pairs(const Eigen::MatrixXd& features, const std::vector<IndexPair>& pairs) {
  const auto n = static_cast<std::size_t>(features.rows());
  for (const auto& [i, j] : pairs) {
    if (i >= n || j >= n) {
      throw ValidationError("constraint pair (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") indexes past " + std::to_string(n) + " instances");
    }
  }
}

Eigen::MatrixXd scatter(const Eigen::MatrixXd& features, const std::vector<IndexPair>& pairs) {
  const Eigen::Index k = features.cols();
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(k, k);
  if (pairs.empty()) return s;
  Eigen::VectorXd diff(k);
  for (const auto& [i, j] : pairs) {
    diff = features.row(static_cast<Eigen::Index>(i)) - features.row(static_cast<Eigen::Index>(j));
    s.selfadjointView<Eigen::Lower>().rankUpdate(diff);
  }
  s.triangularView<Eigen::StrictlyUpper>() = s.transpose();
  s /= 2.0 * static_cast<double>(pairs.size());
  return s;
}

double mean_squared_distance(const Eigen::MatrixXd& features, const std::vector<IndexPair>& pairs) {
  double sum = 0.0;
  for (const auto& [i, j] : pairs) {
    sum += (features.row(static_cast<Eigen::Index>(i)) - features.row(static_cast<Eigen::Index>(j))).squaredNorm();
  }
  return sum / static_cast<double>(pairs.size());
}

}  // namespace

ScatterPair scatter_matrices(const Eigen::MatrixXd& features, const PairConstraintSets& sets) {
  check_pairs(features, sets.cannot);
  check_pairs(features, sets.must);
  ScatterPair out;
  out.s_cannot = scatter(features, sets.cannot);
  out.s_must = scatter(features, sets.must);
  out.n_cannot = sets.cannot.size();
  out.n_must = sets.must.size();
  return out;
}

double scaling_coefficient(const Eigen::MatrixXd& features, const PairConstraintSets& sets) {
  if (sets.cannot.empty() || sets.must.empty()) return 1.0;
  check_pairs(features, sets.cannot);
  check_pairs(features, sets.must);
  const double cannot_mean = mean_squared_distance(features, sets.cannot);
  const double must_mean = mean_squared_distance(features, sets.must);
  if (must_mean == 0.0 || cannot_mean == 0.0) return 1.0;
  return cannot_mean / must_mean;
}

ProjectionModel fit_projection(const Eigen::MatrixXd& features, const PairConstraintSets& sets) {
  if (features.rows() < 2) throw ValidationError("projection needs at least 2 instances");
  const ScatterPair scatter = scatter_matrices(features, sets);
  const double r = scaling_coefficient(features, sets);
  const Eigen::MatrixXd objective_matrix = scatter.s_cannot - r * scatter.s_must;
  const SymmetricEigen eig = symmetric_eigen(objective_matrix);

  Eigen::Index kept = 0;
  while (kept < eig.values.size() && eig.values(kept) >= 0.0) ++kept;
  if (kept == 0) kept = 1;

  ProjectionModel model;
  model.w = eig.vectors.leftCols(kept);
  model.eigenvalues = eig.values.head(kept);
  model.scaling_r = r;
  model.objective = model.eigenvalues.sum();
  return model;
}

ProjectionModel identity_projection(std::size_t k) {
  const auto dim = static_cast<Eigen::Index>(k);
  ProjectionModel model;
  model.w = Eigen::MatrixXd::Identity(dim, dim);
  model.eigenvalues = Eigen::VectorXd::Zero(dim);
  return model;
}

Eigen::VectorXd transform(const ProjectionModel& model, const Eigen::VectorXd& x) {
  if (x.size() != model.w.rows()) {
    throw ValidationError("transform expects " + std::to_string(model.w.rows()) + " features, got " +
                          std::to_string(x.size()));
  }
  return model.w.transpose() * x;
}

Eigen::MatrixXd transform(const ProjectionModel& model, const Eigen::MatrixXd& rows) {
  if (rows.cols() != model.w.rows()) {
    throw ValidationError("transform expects " + std::to_string(model.w.rows()) + " features, got " +
                          std::to_string(rows.cols()));
  }
  Eigen::MatrixXd out(rows.rows(), model.w.cols());
  Eigen::VectorXd x(rows.cols());
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    x = rows.row(i).transpose();
    out.row(i) = (model.w.transpose() * x).transpose();
  }
  return out;
}

double projected_trace(const Eigen::MatrixXd& w, const Eigen::MatrixXd& a) {
  return (w.transpose() * a * w).trace();
}

}  // namespace vpcme
