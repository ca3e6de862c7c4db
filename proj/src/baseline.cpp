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

#include "nashadmm/baseline.hpp"

#include <string>

#include "parallel.hpp"
#include "run_loop.hpp"

namespace nashadmm {

void BaselineConfig::validate() const {
  if (!(gamma > 0.0)) throw SolverError("baseline gamma must be positive");
  for (double g : sweep)
    if (!(g > 0.0)) throw SolverError("baseline sweep step sizes must be positive");
  stop.validate();
}

SolverState baseline_step(const SolverState& state, const GameModel& game,
                          const CommGraph& graph, double gamma,
                          std::size_t threads) {
  const std::size_t n = graph.size();
  const Matrix& x = state.estimates;
  SolverState next;
  next.estimates.resize(x.rows(), x.cols());
  next.penalty = state.penalty;
  next.k = state.k + 1;
  std::vector<std::size_t> guard(n, 0);

  detail::for_each_player(n, threads, [&](std::size_t i) {
    const auto r = static_cast<Eigen::Index>(i);
    const auto nb = graph.neighbors(i);
    Eigen::RowVectorXd total = x.row(r);
    for (std::size_t j : nb) total += x.row(static_cast<Eigen::Index>(j));
    next.estimates.row(r) = total / static_cast<double>(nb.size() + 1);

    const GradEval g = game.grad_eval(i, row_span(x, i));
    guard[i] = g.guard_hits;
    next.estimates(r, r) = game.box().project(i, x(r, r) - gamma * g.value);
  });
  for (std::size_t h : guard) next.guard_activations += h;
  return next;
}

RunResult run_baseline(const GameModel& game, const CommGraph& graph,
                       const BaselineConfig& cfg, SolverState init,
                       const StepObserver& observer) {
  require_solver_graph(graph);
  cfg.validate();
  return detail::run_loop(
      game, graph, std::move(init), cfg.stop,
      [&](const SolverState& s) {
        return baseline_step(s, game, graph, cfg.gamma, cfg.threads);
      },
      observer);
}

RunResult run_baseline(const GameModel& game, const CommGraph& graph,
                       const BaselineConfig& cfg, const Eigen::VectorXd& x0,
                       const StepObserver& observer) {
  return run_baseline(game, graph, cfg, init_state(game, graph, x0), observer);
}

namespace {

void fill_ratio(ComparisonReport& report) {
  if (!report.admm.converged() || report.admm.iterations() == 0) return;
  report.ratio = static_cast<double>(report.baseline.iterations()) /
                 static_cast<double>(report.admm.iterations());
  report.ratio_is_lower_bound = !report.baseline.converged();
}

}  // namespace

ComparisonReport compare(const GameModel& game, const CommGraph& graph,
                         const AdmmConfig& admm_cfg,
                         const BaselineConfig& baseline_cfg, double tol,
                         const Matrix& x0) {
  if (!(tol > 0.0)) throw SolverError("comparison tolerance must be positive");
  baseline_cfg.validate();

  ComparisonReport report;
  report.tol = tol;

  AdmmConfig admm = admm_cfg;
  admm.stop.tol_consensus = tol;
  admm.stop.tol_residual = tol;
  report.admm = run_admm(game, graph, admm, init_state(game, graph, x0));

  std::vector<double> gammas = baseline_cfg.sweep;
  if (gammas.empty()) gammas.push_back(baseline_cfg.gamma);

  bool have_best = false;
  for (double gamma : gammas) {
    BaselineConfig cfg = baseline_cfg;
    cfg.gamma = gamma;
    cfg.stop.tol_consensus = tol;
    cfg.stop.tol_residual = tol;
    RunResult run = run_baseline(game, graph, cfg, init_state(game, graph, x0));
    report.sweep.push_back({gamma, run.reason, run.iterations()});

    const bool better =
        run.converged() &&
        (!have_best || !report.baseline.converged() ||
         run.iterations() < report.baseline.iterations());
    const bool fallback = !have_best || (!report.baseline.converged() &&
                                         gamma < report.baseline_gamma);
    if (better || (!run.converged() && fallback)) {
      report.baseline = std::move(run);
      report.baseline_gamma = gamma;
      have_best = true;
    }
  }
  fill_ratio(report);
  return report;
}

ComparisonReport compare(const GameModel& game, const CommGraph& graph,
                         const AdmmConfig& admm_cfg,
                         const BaselineConfig& baseline_cfg, double tol,
                         const Eigen::VectorXd& x0) {
  return compare(game, graph, admm_cfg, baseline_cfg, tol,
                 init_state(game, graph, x0).estimates);
}

ComparisonReport compare_self(const GameModel& game, const CommGraph& graph,
                              const AdmmConfig& admm_cfg, double tol,
                              const Matrix& x0) {
  if (!(tol > 0.0)) throw SolverError("comparison tolerance must be positive");
  ComparisonReport report;
  report.tol = tol;
  AdmmConfig admm = admm_cfg;
  admm.stop.tol_consensus = tol;
  admm.stop.tol_residual = tol;
  report.admm = run_admm(game, graph, admm, init_state(game, graph, x0));
  report.baseline = run_admm(game, graph, admm, init_state(game, graph, x0));
  report.sweep.push_back({0.0, report.baseline.reason, report.baseline.iterations()});
  fill_ratio(report);
  return report;
}

}  // namespace nashadmm
