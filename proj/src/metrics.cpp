/**
 * Copyright 2026, The nashadmm Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may not
 * use this file except in compliance with the License. You may obtain a copy of
 * the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
 * WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
 * License for the specific language governing permissions and limitations under
 * the License.
 */

#include "nashadmm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nashadmm {

double consensus_error(const Matrix& estimates, const CommGraph& graph) {
  if (static_cast<std::size_t>(estimates.rows()) != graph.size())
    throw std::invalid_argument("estimate matrix has " +
                                std::to_string(estimates.rows()) +
                                " rows for a graph of " +
                                std::to_string(graph.size()) + " nodes");
  double worst = 0.0;
  for (const auto& [i, j] : graph.edges()) {
    const auto a = static_cast<Eigen::Index>(i);
    const auto b = static_cast<Eigen::Index>(j);
    worst = std::max(worst, (estimates.row(a) - estimates.row(b)).cwiseAbs().maxCoeff());
  }
  return worst;
}

double ne_residual(const GameModel& game, std::span<const double> x) {
  const ActionBox& box = game.box();
  if (x.size() != box.size())
    throw std::invalid_argument("profile length does not match player count");
  double worst = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double step = box.project(i, x[i] - game.grad(i, x));
    const double gap = std::abs(x[i] - step);
    // NaN must surface rather than vanish inside max().
    if (std::isnan(gap)) return gap;
    worst = std::max(worst, gap);
  }
  return worst;
}

double ne_residual(const GameModel& game, const Eigen::VectorXd& x) {
  return ne_residual(game, as_span(x));
}

double m2_seminorm_distance(const Matrix& estimates, const Eigen::VectorXd& x_star,
                            std::span<const double> beta, double c,
                            const CommGraph& graph) {
  const std::size_t n = graph.size();
  if (static_cast<std::size_t>(estimates.rows()) != n ||
      estimates.cols() != x_star.size() || beta.size() != n)
    throw std::invalid_argument("m2_seminorm_distance: dimension mismatch");

  const Matrix diff = estimates.rowwise() - x_star.transpose();
  double quad = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = static_cast<Eigen::Index>(i);
    const double own = diff(r, r);
    quad += beta[i] * own * own;
    // Diagonal block: (D + A)_ii = deg(i); off-diagonal blocks: A_ij = 1.
    double block = static_cast<double>(graph.degree(i)) * diff.row(r).squaredNorm();
    for (std::size_t j : graph.neighbors(i))
      block += diff.row(r).dot(diff.row(static_cast<Eigen::Index>(j)));
    quad += c * block;
  }
  return 0.5 * quad;
}

std::string to_string(Termination t) {
  switch (t) {
    case Termination::kConverged:
      return "converged";
    case Termination::kIterationBudget:
      return "iteration budget";
    case Termination::kDiverged:
      return "diverged";
  }
  return "unknown";
}

}  // namespace nashadmm
