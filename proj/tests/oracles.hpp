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

// Reference computations used only by the tests. None of them call into the
// library routine they are compared against.

#ifndef NASHADMM_TESTS_ORACLES_HPP_
#define NASHADMM_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "nashadmm/game.hpp"
#include "nashadmm/graph.hpp"
#include "nashadmm/types.hpp"

namespace oracle {

inline std::vector<double> eigenvalues(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd v = es.eigenvalues();
  std::vector<double> out(v.data(), v.data() + v.size());
  std::sort(out.begin(), out.end());
  return out;
}

/// D + A assembled straight from the edge list.
inline Eigen::MatrixXd d_plus_a(const nashadmm::CommGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [a, b] : g.edges()) {
    const auto i = static_cast<Eigen::Index>(a);
    const auto j = static_cast<Eigen::Index>(b);
    m(i, j) += 1.0;
    m(j, i) += 1.0;
    m(i, i) += 1.0;
    m(j, j) += 1.0;
  }
  return m;
}

inline Eigen::MatrixXd normalized_laplacian(const nashadmm::CommGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::VectorXd deg = Eigen::VectorXd::Zero(n);
  for (const auto& [a, b] : g.edges()) {
    deg(static_cast<Eigen::Index>(a)) += 1.0;
    deg(static_cast<Eigen::Index>(b)) += 1.0;
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  for (const auto& [a, b] : g.edges()) {
    const auto i = static_cast<Eigen::Index>(a);
    const auto j = static_cast<Eigen::Index>(b);
    const double w = 1.0 / std::sqrt(deg(i) * deg(j));
    m(i, j) -= w;
    m(j, i) -= w;
  }
  return m;
}

/// Central difference of J_i along coordinate i.
inline double fd_grad(const nashadmm::GameModel& game, std::size_t i,
                      std::vector<double> x, double h = 1e-6) {
  const double xi = x[i];
  x[i] = xi + h;
  const double up = game.cost(i, x);
  x[i] = xi - h;
  const double down = game.cost(i, x);
  return (up - down) / (2.0 * h);
}

/// Index of the minimiser of J_i(., x_{-i}) over an evenly spaced grid on the
/// i-th interval, returned as the grid point itself.
inline double grid_best_response(const nashadmm::GameModel& game, std::size_t i,
                                 std::vector<double> x, std::size_t points,
                                 double* step = nullptr) {
  const double lo = game.box().lower(i);
  const double hi = game.box().upper(i);
  const double h = (hi - lo) / static_cast<double>(points - 1);
  if (step) *step = h;
  double best = std::numeric_limits<double>::infinity();
  double arg = lo;
  for (std::size_t p = 0; p < points; ++p) {
    x[i] = lo + h * static_cast<double>(p);
    const double v = game.cost(i, x);
    if (v < best) {
      best = v;
      arg = x[i];
    }
  }
  return arg;
}

/// Unconstrained stationary point of a quadratic game by Householder QR.
inline Eigen::VectorXd quadratic_stationary(const nashadmm::QuadraticGame& g) {
  Eigen::MatrixXd m = g.coupling();
  m.diagonal() += g.a();
  return m.colPivHouseholderQr().solve(-g.d());
}

inline std::vector<double> to_std(const Eigen::VectorXd& v) {
  return {v.data(), v.data() + v.size()};
}

}  // namespace oracle

#endif  // NASHADMM_TESTS_ORACLES_HPP_
