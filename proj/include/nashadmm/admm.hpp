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

#ifndef NASHADMM_ADMM_HPP_
#define NASHADMM_ADMM_HPP_

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "nashadmm/game.hpp"
#include "nashadmm/graph.hpp"
#include "nashadmm/solver.hpp"
#include "nashadmm/types.hpp"

namespace nashadmm {

/**
 * Parameters of the inexact consensus ADMM iteration.
 *
 * `penalty` (c) weighs both the consensus penalty and the dual step;
 * `beta` holds the per-player proximal weights of the linearized action
 * update. An empty `beta` means 1 for every player, a single entry is
 * broadcast.
 */
struct AdmmConfig {
  double penalty = 1.0;
  std::vector<double> beta;
  StopRule stop;
  /// Worker threads for the per-player loop; 1 is the deterministic default.
  std::size_t threads = 1;

  /// Per-player beta for an n-player game; throws SolverError if invalid.
  std::vector<double> resolved_beta(std::size_t n) const;
  void validate(std::size_t n) const;
};

/**
 * One synchronous iteration in the compact w-state form. Every player reads
 * only iteration-k data:
 *
 *   w^i  <- w^i + c sum_{j in N_i} (x^i - x^j)
 *   x^i_{-i} <- mean_{j in N_i} x^j_{-i} - w^i_{-i}(old) / (2 c |N_i|)
 *   x^i_i <- P_i[ ((beta_i + c|N_i|) x^i_i
 *                  - w^i_i(new) - grad_i J_i(x^i) + c sum_j x^j_i) / alpha_i ]
 *
 * with alpha_i = beta_i + 2 c |N_i|.
 */
SolverState admm_step(const SolverState& state, const GameModel& game,
                      const CommGraph& graph, const AdmmConfig& cfg);

/**
 * Multipliers u^{ij}, v^{ij} for every directed edge (i, j), j in N_i, next
 * to the estimates. Used by the explicit-multiplier form of the iteration,
 * which must trace the same estimates as admm_step.
 */
class DualState {
 public:
  DualState(const CommGraph& graph, Matrix estimates);

  std::size_t k = 0;
  Matrix estimates;

  /// Row of u^{ij} / v^{ij}. Throws std::out_of_range if j is not in N_i.
  auto u(std::size_t i, std::size_t j) const { return u_.row(slot(i, j)); }
  auto v(std::size_t i, std::size_t j) const { return v_.row(slot(i, j)); }

  /// Rebuilds w^i = sum_{j in N_i} (u^{ij} + v^{ji}) for every player.
  Matrix penalty() const;
  /// max over directed edges and coordinates of |u^{ij} + v^{ij}|.
  double dual_sum_error() const;

  std::size_t num_players() const { return neighbors_.size(); }
  const std::vector<std::size_t>& neighbors(std::size_t i) const {
    return neighbors_.at(i);
  }

 private:
  friend DualState unsimplified_step(const DualState&, const GameModel&,
                                     const CommGraph&, const AdmmConfig&);

  Eigen::Index slot(std::size_t i, std::size_t j) const;

  std::vector<std::vector<std::size_t>> neighbors_;
  std::vector<std::size_t> offsets_;
  Matrix u_;
  Matrix v_;
};

/**
 * One iteration with explicit multipliers: both multiplier updates from the
 * iteration-k estimates, the averaged estimate update with the fresh
 * multipliers, then the action as the closed-form minimizer of the
 * linearized proximal subproblem.
 */
DualState unsimplified_step(const DualState& state, const GameModel& game,
                            const CommGraph& graph, const AdmmConfig& cfg);

/// Iterates admm_step from `init` under cfg.stop.
RunResult run_admm(const GameModel& game, const CommGraph& graph,
                   const AdmmConfig& cfg, SolverState init,
                   const StepObserver& observer = {});
RunResult run_admm(const GameModel& game, const CommGraph& graph,
                   const AdmmConfig& cfg, const Eigen::VectorXd& x0,
                   const StepObserver& observer = {});

struct ConditionCheck {
  bool satisfied = false;
  /// sigma_f - threshold; the condition is strict, so zero is a failure.
  double margin = 0.0;
  double threshold = 0.0;
  double beta_min = 0.0;
  double lambda_min = 0.0;
};

/// Sufficient convergence condition sigma_f > 1 / (2 (beta_min + c
/// lambda_min(D + A))).
ConditionCheck check_condition(double sigma_f, const AdmmConfig& cfg,
                               const CommGraph& graph);

double m2_seminorm_distance(const Matrix& estimates, const Eigen::VectorXd& x_star,
                            const AdmmConfig& cfg, const CommGraph& graph);

}  // namespace nashadmm

#endif  // NASHADMM_ADMM_HPP_
