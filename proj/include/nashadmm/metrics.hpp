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

#ifndef NASHADMM_METRICS_HPP_
#define NASHADMM_METRICS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nashadmm/game.hpp"
#include "nashadmm/graph.hpp"
#include "nashadmm/types.hpp"

namespace nashadmm {

/// Max over edges {i,j} of |x^i - x^j|_inf. Zero iff neighbors agree.
double consensus_error(const Matrix& estimates, const CommGraph& graph);

/// |x - P_box[x - F(x)]|_inf with F evaluated at the common profile x.
/// Zero exactly at Nash equilibria of games with convex costs.
double ne_residual(const GameModel& game, std::span<const double> x);
double ne_residual(const GameModel& game, const Eigen::VectorXd& x);

/**
 * (1/2) (X - 1 x*^T)^T M2 (X - 1 x*^T) with the estimates stacked row-wise and
 * M2 = diag(beta_i e_i e_i^T) + c (D + A) kron I_N, evaluated blockwise.
 */
double m2_seminorm_distance(const Matrix& estimates, const Eigen::VectorXd& x_star,
                            std::span<const double> beta, double c,
                            const CommGraph& graph);

/// Diagnostics captured at one iteration of a solver.
struct IterationRecord {
  std::size_t k = 0;
  Eigen::VectorXd actions;
  double consensus_error = 0.0;
  double ne_residual = 0.0;
  std::size_t guard_activations = 0;
  std::int64_t elapsed_us = 0;
};

enum class Termination { kConverged, kIterationBudget, kDiverged };

std::string to_string(Termination t);

}  // namespace nashadmm

#endif  // NASHADMM_METRICS_HPP_
