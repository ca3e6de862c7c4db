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

#ifndef NASHADMM_BASELINE_HPP_
#define NASHADMM_BASELINE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "nashadmm/admm.hpp"
#include "nashadmm/game.hpp"
#include "nashadmm/graph.hpp"
#include "nashadmm/solver.hpp"

namespace nashadmm {

/// Synchronous projected pseudo-gradient play with consensus averaging.
struct BaselineConfig {
  double gamma = 0.05;
  /// Step sizes tried by compare(); empty means only `gamma`.
  std::vector<double> sweep{0.2, 0.1, 0.05, 0.02, 0.01};
  StopRule stop;
  std::size_t threads = 1;

  void validate() const;
};

/**
 * One step: every player replaces its estimates of the others by the mean
 * over itself and its neighbors, and moves its own action along the
 * negative partial gradient, x_i <- P_i[x_i - gamma grad_i J_i(x^i)].
 */
SolverState baseline_step(const SolverState& state, const GameModel& game,
                          const CommGraph& graph, double gamma,
                          std::size_t threads = 1);

/// Runs baseline_step with cfg.gamma under cfg.stop.
RunResult run_baseline(const GameModel& game, const CommGraph& graph,
                       const BaselineConfig& cfg, SolverState init,
                       const StepObserver& observer = {});
RunResult run_baseline(const GameModel& game, const CommGraph& graph,
                       const BaselineConfig& cfg, const Eigen::VectorXd& x0,
                       const StepObserver& observer = {});

struct SweepOutcome {
  double gamma = 0.0;
  Termination reason = Termination::kIterationBudget;
  std::size_t iterations = 0;
};

struct ComparisonReport {
  double tol = 0.0;
  RunResult admm;
  /// Best converged sweep run, or the smallest-step run if none converged.
  RunResult baseline;
  double baseline_gamma = 0.0;
  std::vector<SweepOutcome> sweep;

  /// Baseline iterations over ADMM iterations, when ADMM converged. If the
  /// baseline did not converge, the ratio uses its budget and is a lower bound.
  std::optional<double> ratio;
  bool ratio_is_lower_bound = false;
};

/// Runs ADMM and the swept baseline from the same initial estimates until
/// both the consensus error and the NE residual are at most `tol` (or each
/// budget is spent).
ComparisonReport compare(const GameModel& game, const CommGraph& graph,
                         const AdmmConfig& admm_cfg,
                         const BaselineConfig& baseline_cfg, double tol,
                         const Matrix& x0);
ComparisonReport compare(const GameModel& game, const CommGraph& graph,
                         const AdmmConfig& admm_cfg,
                         const BaselineConfig& baseline_cfg, double tol,
                         const Eigen::VectorXd& x0);

/// compare() with ADMM standing in for the baseline; the ratio is 1.
ComparisonReport compare_self(const GameModel& game, const CommGraph& graph,
                              const AdmmConfig& admm_cfg, double tol,
                              const Matrix& x0);

}  // namespace nashadmm

#endif  // NASHADMM_BASELINE_HPP_
