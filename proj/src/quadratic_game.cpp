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

#include <cmath>
#include <random>
#include <string>

#include <Eigen/LU>

#include "nashadmm/game.hpp"
#include "nashadmm/random.hpp"

namespace nashadmm {

QuadraticGame::QuadraticGame(Eigen::VectorXd a, Eigen::MatrixXd coupling,
                             Eigen::VectorXd d, ActionBox box)
    : a_(std::move(a)),
      coupling_(std::move(coupling)),
      d_(std::move(d)),
      box_(std::move(box)) {
  const Eigen::Index n = a_.size();
  if (n == 0) throw GameError("quadratic game needs at least one player");
  if (coupling_.rows() != n || coupling_.cols() != n)
    throw GameError("coupling matrix must be " + std::to_string(n) + "x" +
                    std::to_string(n));
  if (d_.size() != n) throw GameError("d must have one entry per player");
  if (box_.size() != static_cast<std::size_t>(n))
    throw GameError("action box must have one interval per player");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(a_(i) > 0.0))
      throw GameError("own-curvature a[" + std::to_string(i) +
                      "] must be positive");
    if (coupling_(i, i) != 0.0)
      throw GameError("coupling matrix must have a zero diagonal");
  }
}

double QuadraticGame::cost(std::size_t i, std::span<const double> x) const {
  const auto r = static_cast<Eigen::Index>(i);
  double cross = 0.0;
  for (Eigen::Index j = 0; j < a_.size(); ++j)
    if (j != r) cross += coupling_(r, j) * x[static_cast<std::size_t>(j)];
  const double xi = x[i];
  return 0.5 * a_(r) * xi * xi + xi * cross + d_(r) * xi;
}

GradEval QuadraticGame::grad_eval(std::size_t i,
                                  std::span<const double> x) const {
  const auto r = static_cast<Eigen::Index>(i);
  double g = a_(r) * x[i] + d_(r);
  for (Eigen::Index j = 0; j < a_.size(); ++j)
    if (j != r) g += coupling_(r, j) * x[static_cast<std::size_t>(j)];
  return {g, 0};
}

Eigen::MatrixXd QuadraticGame::jacobian() const {
  Eigen::MatrixXd m = coupling_;
  m.diagonal() += a_;
  return m;
}

Eigen::VectorXd quadratic_ne(const QuadraticGame& game) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(game.jacobian());
  if (!lu.isInvertible())
    throw GameError("quadratic game Jacobian diag(a) + B is singular");
  Eigen::VectorXd x = lu.solve(-game.d());
  const ActionBox& box = game.box();
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (!(x(i) > box.lower(k) && x(i) < box.upper(k)))
      throw GameError("equilibrium coordinate " + std::to_string(k) +
                      " is not interior to the action box; linear-solve "
                      "oracle does not apply");
  }
  return x;
}

QuadraticGame random_quadratic_game(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw GameError("random_quadratic_game needs n >= 1");
  std::mt19937_64 rng(seed);
  const auto m = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd coupling = Eigen::MatrixXd::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = i + 1; j < m; ++j)
      coupling(i, j) = coupling(j, i) = uniform(rng, -0.5, 0.5);
  Eigen::VectorXd a(m);
  for (Eigen::Index i = 0; i < m; ++i)
    a(i) = coupling.row(i).cwiseAbs().sum() + uniform(rng, 1.0, 2.0);
  Eigen::VectorXd x_star(m);
  for (Eigen::Index i = 0; i < m; ++i) x_star(i) = uniform(rng, -1.0, 1.0);

  Eigen::MatrixXd jac = coupling;
  jac.diagonal() += a;
  Eigen::VectorXd d = -(jac * x_star);
  return QuadraticGame(std::move(a), std::move(coupling), std::move(d),
                       ActionBox::uniform(n, -5.0, 5.0));
}

}  // namespace nashadmm
