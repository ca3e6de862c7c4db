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

#include "nashadmm/solver.hpp"

#include <string>

namespace nashadmm {

void StopRule::validate() const {
  if (!(tol_consensus > 0.0))
    throw SolverError("tol_consensus must be positive");
  if (!(tol_residual > 0.0)) throw SolverError("tol_residual must be positive");
  if (record_every == 0) throw SolverError("record_every must be at least 1");
}

SolverState init_state(const GameModel& game, const CommGraph& graph,
                       const Matrix& x0) {
  require_solver_graph(graph);
  const std::size_t n = game.num_players();
  if (graph.size() != n)
    throw SolverError("graph has " + std::to_string(graph.size()) +
                      " nodes but the game has " + std::to_string(n) +
                      " players");
  if (static_cast<std::size_t>(x0.rows()) != n ||
      static_cast<std::size_t>(x0.cols()) != n)
    throw SolverError("initial estimates must be " + std::to_string(n) + "x" +
                      std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    if (!game.box().contains(row_span(x0, i)))
      throw SolverError("initial estimate of player " + std::to_string(i) +
                        " lies outside the action box");

  SolverState s;
  s.estimates = x0;
  s.penalty = Matrix::Zero(x0.rows(), x0.cols());
  return s;
}

SolverState init_state(const GameModel& game, const CommGraph& graph,
                       const Eigen::VectorXd& x0) {
  const auto n = static_cast<Eigen::Index>(game.num_players());
  if (x0.size() != n)
    throw SolverError("initial profile has " + std::to_string(x0.size()) +
                      " entries for " + std::to_string(n) + " players");
  Matrix rows = x0.transpose().replicate(n, 1);
  return init_state(game, graph, rows);
}

}  // namespace nashadmm
