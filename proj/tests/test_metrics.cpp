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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "nashadmm/admm.hpp"
#include "nashadmm/metrics.hpp"
#include "nashadmm/random.hpp"
#include "oracles.hpp"

using namespace nashadmm;

TEST_CASE("consensus error") {
  const CommGraph ring = CommGraph::ring(4);
  Matrix x = Matrix::Constant(4, 4, 0.7);
  CHECK(consensus_error(x, ring) == 0.0);

  const CommGraph edge = CommGraph::path(2);
  Matrix two = Matrix::Zero(2, 3);
  two(1, 2) = 0.5;
  CHECK(consensus_error(two, edge) == 0.5);

  // Disagreement between non-neighbours is invisible.
  Matrix far = Matrix::Zero(3, 3);
  far(2, 0) = 1.0;
  CHECK(consensus_error(far, CommGraph(3, {{0, 1}})) == 0.0);
}

TEST_CASE("consensus error is invariant under joint relabelling") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + uniform_index(rng, 8);
    const CommGraph g = random_connected_graph(n, uniform_index(rng, n * (n - 3) / 2 + 1), rng());
    Matrix x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < x.size(); ++i) x.data()[i] = uniform(rng, -1, 1);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.edges()) edges.emplace_back(perm[a], perm[b]);
    const CommGraph pg(n, edges);
    Matrix px(x.rows(), x.cols());
    for (std::size_t i = 0; i < n; ++i)
      px.row(static_cast<Eigen::Index>(perm[i])) = x.row(static_cast<Eigen::Index>(i));
    CHECK(consensus_error(px, pg) == consensus_error(x, g));
  }
}

TEST_CASE("ne residual") {
  QuadraticGame boundary(Eigen::VectorXd::Ones(1), Eigen::MatrixXd::Zero(1, 1),
                         Eigen::VectorXd::Constant(1, -2.0), ActionBox::uniform(1, 0, 1));
  CHECK(ne_residual(boundary, Eigen::VectorXd::Constant(1, 1.0)) == 0.0);
  CHECK(ne_residual(boundary, Eigen::VectorXd::Constant(1, 0.0)) == 1.0);

  std::mt19937_64 rng(8);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const QuadraticGame g = random_quadratic_game(5, seed);
    const Eigen::VectorXd ne = oracle::quadratic_stationary(g);
    CHECK(ne_residual(g, ne) <= 1e-10);
    for (int s = 0; s < 20; ++s) {
      Eigen::VectorXd x(5);
      for (Eigen::Index i = 0; i < 5; ++i) x(i) = uniform(rng, -5, 5);
      CHECK(ne_residual(g, x) > 0.0);
    }
  }
  const QuadraticGame g = random_quadratic_game(3, 1);
  CHECK(std::isnan(ne_residual(g, Eigen::Vector3d(NAN, 0, 0))));
}

TEST_CASE("M2 seminorm distance") {
  const CommGraph g = CommGraph::ring(5);
  const Eigen::VectorXd xs = Eigen::VectorXd::LinSpaced(5, -1, 1);
  Matrix x(5, 5);
  for (Eigen::Index i = 0; i < 5; ++i) x.row(i) = xs.transpose();
  const std::vector<double> beta{1.0, 2.0, 3.0, 4.0, 5.0};
  CHECK(m2_seminorm_distance(x, xs, beta, 0.7, g) == 0.0);

  const double delta = 0.3;
  Matrix y = x;
  y(2, 2) += delta;
  const double expect = 0.5 * (beta[2] + 0.7 * 2.0) * delta * delta;
  CHECK(std::abs(m2_seminorm_distance(y, xs, beta, 0.7, g) - expect) < 1e-15);

  // Independent assembly of the full quadratic form.
  std::mt19937_64 rng(4);
  const CommGraph h = random_connected_graph(6, 3, 2);
  const Eigen::MatrixXd da = oracle::d_plus_a(h);
  const Eigen::VectorXd star = Eigen::VectorXd::Zero(6);
  const std::vector<double> b6(6, 1.5);
  for (int s = 0; s < 100; ++s) {
    Matrix z(6, 6);
    for (Eigen::Index i = 0; i < z.size(); ++i) z.data()[i] = uniform(rng, -1, 1);
    const Eigen::Index n = 6;
    Eigen::MatrixXd m2 = Eigen::MatrixXd::Zero(n * n, n * n);
    for (Eigen::Index i = 0; i < n; ++i) {
      m2(i * n + i, i * n + i) += b6[static_cast<std::size_t>(i)];
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index a = 0; a < n; ++a) m2(i * n + a, j * n + a) += 0.4 * da(i, j);
    }
    Eigen::VectorXd e(n * n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index a = 0; a < n; ++a) e(i * n + a) = z(i, a) - star(a);
    const double ref = 0.5 * e.dot(m2 * e);
    const double got = m2_seminorm_distance(z, star, b6, 0.4, h);
    CHECK(got >= 0.0);
    CHECK(std::abs(got - ref) < 1e-12);
  }
}
