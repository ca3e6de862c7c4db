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

// Explicit-multiplier form of the iteration. It keeps u^{ij}, v^{ij} for every
// directed edge instead of the per-player aggregate w^i; the auxiliary
// midpoint variable of the splitting is folded into the action update.

#include <algorithm>
#include <string>

#include "nashadmm/admm.hpp"
#include "parallel.hpp"

namespace nashadmm {

DualState::DualState(const CommGraph& graph, Matrix x)
    : estimates(std::move(x)), neighbors_(graph.size()), offsets_(graph.size() + 1, 0) {
  const std::size_t n = graph.size();
  if (static_cast<std::size_t>(estimates.rows()) != n ||
      static_cast<std::size_t>(estimates.cols()) != n)
    throw SolverError("dual state needs an " + std::to_string(n) + "x" +
                      std::to_string(n) + " estimate matrix");
  for (std::size_t i = 0; i < n; ++i) {
    const auto nb = graph.neighbors(i);
    neighbors_[i].assign(nb.begin(), nb.end());
    offsets_[i + 1] = offsets_[i] + nb.size();
  }
  const auto directed = static_cast<Eigen::Index>(offsets_.back());
  u_ = Matrix::Zero(directed, estimates.cols());
  v_ = Matrix::Zero(directed, estimates.cols());
}

Eigen::Index DualState::slot(std::size_t i, std::size_t j) const {
  const auto& nb = neighbors_.at(i);
  const auto it = std::lower_bound(nb.begin(), nb.end(), j);
  if (it == nb.end() || *it != j)
    throw std::out_of_range("no edge (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
  return static_cast<Eigen::Index>(offsets_[i] +
                                   static_cast<std::size_t>(it - nb.begin()));
}

Matrix DualState::penalty() const {
  Matrix w = Matrix::Zero(estimates.rows(), estimates.cols());
  for (std::size_t i = 0; i < neighbors_.size(); ++i)
    for (std::size_t j : neighbors_[i])
      w.row(static_cast<Eigen::Index>(i)) += u_.row(slot(i, j)) + v_.row(slot(j, i));
  return w;
}

double DualState::dual_sum_error() const {
  if (u_.size() == 0) return 0.0;
  return (u_ + v_).cwiseAbs().maxCoeff();
}

DualState unsimplified_step(const DualState& state, const GameModel& game,
                            const CommGraph& graph, const AdmmConfig& cfg) {
  const std::size_t n = graph.size();
  if (state.num_players() != n)
    throw SolverError("dual state does not match the graph");
  const std::vector<double> beta = cfg.resolved_beta(n);
  const double c = cfg.penalty;
  const Matrix& x = state.estimates;

  DualState next = state;
  next.k = state.k + 1;

  // Multipliers first, from the iteration-k estimates.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : state.neighbors(i)) {
      const Eigen::Index e = state.slot(i, j);
      const auto a = static_cast<Eigen::Index>(i);
      const auto b = static_cast<Eigen::Index>(j);
      next.u_.row(e) = state.u_.row(e) + (c / 2.0) * (x.row(a) - x.row(b));
      next.v_.row(e) = state.v_.row(e) + (c / 2.0) * (x.row(b) - x.row(a));
    }
  }

  detail::for_each_player(n, cfg.threads, [&](std::size_t i) {
    const auto r = static_cast<Eigen::Index>(i);
    const auto& nb = state.neighbors(i);
    const double deg = static_cast<double>(nb.size());

    Eigen::RowVectorXd received = Eigen::RowVectorXd::Zero(x.cols());
    Eigen::RowVectorXd multipliers = Eigen::RowVectorXd::Zero(x.cols());
    for (std::size_t j : nb) {
      received += x.row(static_cast<Eigen::Index>(j));
      multipliers += next.u_.row(next.slot(i, j)) + next.v_.row(next.slot(j, i));
    }

    // Average own and received estimates, minus the multiplier penalty.
    next.estimates.row(r) =
        0.5 * (x.row(r) + received / deg) - multipliers / (2.0 * c * deg);

    // Stationarity of grad*(y - x_old) + beta/2 (y - x_old)^2 + m y
    //   + c sum_j (y - (x_old + x_j)/2)^2, then projection onto the interval.
    const double x_old = x(r, r);
    double midpoint_sum = 0.0;
    for (std::size_t j : nb) midpoint_sum += x_old + x(static_cast<Eigen::Index>(j), r);
    const double g = game.grad(i, row_span(x, i));
    const double alpha = beta[i] + 2.0 * c * deg;
    const double unconstrained =
        (beta[i] * x_old - g - multipliers(r) + c * midpoint_sum) / alpha;
    next.estimates(r, r) = game.box().project(i, unconstrained);
  });
  return next;
}

}  // namespace nashadmm
