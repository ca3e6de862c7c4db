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

#ifndef NASHADMM_SRC_RUN_LOOP_HPP_
#define NASHADMM_SRC_RUN_LOOP_HPP_

#include <chrono>
#include <limits>
#include <utility>

#include "nashadmm/metrics.hpp"
#include "nashadmm/solver.hpp"

namespace nashadmm::detail {

inline bool all_finite(const SolverState& s) {
  return s.estimates.allFinite() && s.penalty.allFinite();
}

/// Iterates `step` from `state` until both tolerances hold, the budget is
/// spent, or a non-finite value appears.
template <class Step>
RunResult run_loop(const GameModel& game, const CommGraph& graph,
                   SolverState state, const StopRule& rule, Step&& step,
                   const StepObserver& observer) {
  rule.validate();
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();

  RunResult result;
  double cons = 0.0;
  double res = 0.0;
  auto diagnose = [&](const SolverState& s) {
    cons = consensus_error(s.estimates, graph);
    res = ne_residual(game, s.actions());
  };
  auto record = [&](const SolverState& s) {
    IterationRecord rec;
    rec.k = s.k;
    rec.actions = s.actions();
    rec.consensus_error = cons;
    rec.ne_residual = res;
    rec.guard_activations = s.guard_activations;
    rec.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                         Clock::now() - start)
                         .count();
    result.trace.push_back(std::move(rec));
  };
  auto converged = [&] {
    return cons <= rule.tol_consensus && res <= rule.tol_residual;
  };

  diagnose(state);
  record(state);
  result.reason = Termination::kIterationBudget;
  if (converged()) {
    result.reason = Termination::kConverged;
  } else {
    while (state.k < rule.max_iter) {
      state = step(state);
      if (observer) observer(state);
      if (!all_finite(state)) {
        cons = res = std::numeric_limits<double>::quiet_NaN();
        result.reason = Termination::kDiverged;
        result.diverged_at = state.k;
        record(state);
        break;
      }
      diagnose(state);
      const bool done = converged();
      if (done || state.k % rule.record_every == 0 || state.k == rule.max_iter)
        record(state);
      if (done) {
        result.reason = Termination::kConverged;
        break;
      }
    }
  }
  result.state = std::move(state);
  return result;
}

}  // namespace nashadmm::detail

#endif  // NASHADMM_SRC_RUN_LOOP_HPP_
