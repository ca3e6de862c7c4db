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

#include "nashadmm/admm.hpp"

#include <algorithm>
#include <string>

#include "parallel.hpp"
#include "run_loop.hpp"

namespace nashadmm {

std::vector<double> AdmmConfig::resolved_beta(std::size_t n) const {
  std::vector<double> out;
  if (beta.empty())
    out.assign(n, 1.0);
  else if (beta.size() == 1)
    out.assign(n, beta.front());
  else if (beta.size() == n)
    out = beta;
  else
    throw SolverError("beta has " + std::to_string(beta.size()) +
                      " entries for " + std::to_string(n) + " players");
  for (std::size_t i = 0; i < n; ++i)
    if (!(out[i] > 0.0))
      throw SolverError("beta[" + std::to_string(i) + "] must be positive");
  return out;
}

void AdmmConfig::validate(std::size_t n) const {
  if (!(penalty > 0.0)) throw SolverError("penalty coefficient c must be positive");
  (void)resolved_beta(n);
  stop.validate();
}

SolverState admm_step(const SolverState& state, const GameModel& game,
                      const CommGraph& graph, const AdmmConfig& cfg) {
  const std::size_t n = graph.size();
  const std::vector<double> beta = cfg.resolved_beta(n);
  const double c = cfg.penalty;
  const Matrix& x = state.estimates;
  const Matrix& w = state.penalty;

  SolverState next;
  next.estimates.resize(x.rows(), x.cols());
  next.penalty.resize(w.rows(), w.cols());
  next.k = state.k + 1;
  std::vector<std::size_t> guard(n, 0);

  detail::for_each_player(n, cfg.threads, [&](std::size_t i) {
    const auto r = static_cast<Eigen::Index>(i);
    const auto nb = graph.neighbors(i);
    const double deg = static_cast<double>(nb.size());

    Eigen::RowVectorXd neighbor_sum = Eigen::RowVectorXd::Zero(x.cols());
    Eigen::RowVectorXd disagreement = Eigen::RowVectorXd::Zero(x.cols());
    for (std::size_t j : nb) {
      const auto s = static_cast<Eigen::Index>(j);
      neighbor_sum += x.row(s);
      disagreement += x.row(r) - x.row(s);
    }

    const Eigen::RowVectorXd w_new = w.row(r) + c * disagreement;
    next.penalty.row(r) = w_new;
    next.estimates.row(r) = neighbor_sum / deg - w.row(r) / (2.0 * c * deg);

    const GradEval g = game.grad_eval(i, row_span(x, i));
    guard[i] = g.guard_hits;
    const double alpha = beta[i] + 2.0 * c * deg;
    const double target = (beta[i] + c * deg) / alpha * x(r, r) -
                          (w_new(r) + g.value - c * neighbor_sum(r)) / alpha;
    next.estimates(r, r) = game.box().project(i, target);
  });

  for (std::size_t h : guard) next.guard_activations += h;
  return next;
}

RunResult run_admm(const GameModel& game, const CommGraph& graph,
                   const AdmmConfig& cfg, SolverState init,
                   const StepObserver& observer) {
  require_solver_graph(graph);
  cfg.validate(graph.size());
  return detail::run_loop(
      game, graph, std::move(init), cfg.stop,
      [&](const SolverState& s) { return admm_step(s, game, graph, cfg); },
      observer);
}

RunResult run_admm(const GameModel& game, const CommGraph& graph,
                   const AdmmConfig& cfg, const Eigen::VectorXd& x0,
                   const StepObserver& observer) {
  return run_admm(game, graph, cfg, init_state(game, graph, x0), observer);
}

ConditionCheck check_condition(double sigma_f, const AdmmConfig& cfg,
                               const CommGraph& graph) {
  if (!(sigma_f > 0.0)) throw SolverError("sigma_f must be positive");
  if (!(cfg.penalty > 0.0))
    throw SolverError("penalty coefficient c must be positive");
  ConditionCheck out;
  const std::vector<double> beta = cfg.resolved_beta(graph.size());
  out.beta_min = *std::min_element(beta.begin(), beta.end());
  out.lambda_min = lambda_min_d_plus_a(graph);
  out.threshold = 1.0 / (2.0 * (out.beta_min + cfg.penalty * out.lambda_min));
  out.margin = sigma_f - out.threshold;
  out.satisfied = sigma_f > out.threshold;
  return out;
}

double m2_seminorm_distance(const Matrix& estimates, const Eigen::VectorXd& x_star,
                            const AdmmConfig& cfg, const CommGraph& graph) {
  const std::vector<double> beta = cfg.resolved_beta(graph.size());
  return m2_seminorm_distance(estimates, x_star, beta, cfg.penalty, graph);
}

}  // namespace nashadmm
