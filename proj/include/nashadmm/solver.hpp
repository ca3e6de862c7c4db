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

#ifndef NASHADMM_SOLVER_HPP_
#define NASHADMM_SOLVER_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "nashadmm/game.hpp"
#include "nashadmm/graph.hpp"
#include "nashadmm/metrics.hpp"
#include "nashadmm/types.hpp"

namespace nashadmm {

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Per-player estimates and dual aggregates at iteration k.
 *
 * Row i of `estimates` is player i's copy x^i of the whole profile; its
 * diagonal entry is player i's actual action. Row i of `penalty` is the
 * aggregate w^i of the multipliers on the edges incident to i. The gradient
 * baseline leaves `penalty` at zero.
 */
struct SolverState {
  Matrix estimates;
  Matrix penalty;
  std::size_t k = 0;
  /// Barrier clamps met by the gradient evaluations of the last step.
  std::size_t guard_activations = 0;

  Eigen::VectorXd actions() const { return estimates.diagonal(); }
};

/// Starts every player from the same profile x0; penalty is zero.
SolverState init_state(const GameModel& game, const CommGraph& graph,
                       const Eigen::VectorXd& x0);
/// Starts player i from row i of x0 verbatim.
SolverState init_state(const GameModel& game, const CommGraph& graph,
                       const Matrix& x0);

/// Stopping and recording policy shared by the solvers.
struct StopRule {
  std::size_t max_iter = 5000;
  double tol_consensus = 1e-8;
  double tol_residual = 1e-6;
  /// Diagnostics are kept at k = 0, every multiple of this, and the last k.
  std::size_t record_every = 1;

  void validate() const;
};

/// Called with every post-step state; the initial state is not reported.
using StepObserver = std::function<void(const SolverState&)>;

struct RunResult {
  SolverState state;
  std::vector<IterationRecord> trace;
  Termination reason = Termination::kIterationBudget;
  /// Iteration whose state first held a non-finite value.
  std::optional<std::size_t> diverged_at;

  std::size_t iterations() const { return state.k; }
  bool converged() const { return reason == Termination::kConverged; }
};

}  // namespace nashadmm

#endif  // NASHADMM_SOLVER_HPP_
