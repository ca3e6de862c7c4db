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

#include <random>

#include "nashadmm/graph.hpp"
#include "nashadmm/random.hpp"
#include "nashadmm/spectral.hpp"
#include "oracles.hpp"

using namespace nashadmm;

namespace {

std::vector<std::size_t> nb(const CommGraph& g, std::size_t i) {
  const auto s = neighbors(g, i);
  return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("neighbors of the standard graphs") {
  CHECK(nb(CommGraph::ring(4), 0) == std::vector<std::size_t>{1, 3});
  CHECK(nb(CommGraph::complete(3), 1) == std::vector<std::size_t>{0, 2});
  CHECK(nb(CommGraph::path(3), 1) == std::vector<std::size_t>{0, 2});
  CHECK(nb(CommGraph::path(3), 0) == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(neighbors(CommGraph::ring(4), 4), std::out_of_range);
}

TEST_CASE("edge lists are normalised") {
  CommGraph g(3, {{1, 0}, {0, 1}, {2, 1}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.degree(1) == 2);
  CHECK_THROWS_AS(CommGraph(3, {{0, 0}}), GraphError);
  CHECK_THROWS_AS(CommGraph(3, {{0, 3}}), GraphError);
  CHECK_THROWS_AS(CommGraph(0, {}), GraphError);
  CHECK(CommGraph::ring(2).edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("connectivity") {
  CHECK(is_connected(CommGraph::path(5)));
  CHECK_FALSE(is_connected(CommGraph(4, {{0, 1}, {2, 3}})));
  CHECK(is_connected(CommGraph(1, {})));
  CHECK_THROWS_WITH_AS(require_solver_graph(CommGraph(4, {{0, 1}, {2, 3}})),
                       doctest::Contains("disconnected"), GraphError);
  CHECK_THROWS_AS(lambda_min_d_plus_a(CommGraph(1, {})), GraphError);
}

TEST_CASE("lambda_min(D+A) on small graphs") {
  CHECK(std::abs(lambda_min_d_plus_a(CommGraph::complete(2))) < 1e-12);
  CHECK(std::abs(lambda_min_d_plus_a(CommGraph::complete(3)) - 1.0) < 1e-12);
  CHECK(std::abs(lambda_min_d_plus_a(CommGraph::path(3))) < 1e-12);
  const auto eig = symmetric_eigenvalues(CommGraph::path(3).degree_matrix() +
                                         CommGraph::path(3).adjacency());
  REQUIRE(eig.size() == 3);
  CHECK(std::abs(eig[1] - 1.0) < 1e-12);
  CHECK(std::abs(eig[2] - 3.0) < 1e-12);
}

TEST_CASE("lambda_max of the normalized Laplacian") {
  CHECK(std::abs(lambda_max_normalized_laplacian(CommGraph::path(3)) - 2.0) < 1e-12);
  CHECK(std::abs(lambda_max_normalized_laplacian(CommGraph::complete(3)) - 1.5) < 1e-12);
  CHECK(std::abs(lambda_max_normalized_laplacian(CommGraph::complete(2)) - 2.0) < 1e-12);
  CHECK_THROWS_AS(CommGraph(3, {{0, 1}}).normalized_laplacian(), GraphError);
}

TEST_CASE("random_connected_graph") {
  CHECK(random_connected_graph(4, 0, 123).edges() == CommGraph::ring(4).edges());
  CHECK(random_connected_graph(16, 5, 7).edges() ==
        random_connected_graph(16, 5, 7).edges());
  CHECK(random_connected_graph(16, 5, 7).edges().size() == 21);
  CHECK(random_connected_graph(2, 0, 99).edges() == std::vector<Edge>{{0, 1}});
  CHECK(random_connected_graph(5, 5, 1).edges().size() == 10);
  CHECK_THROWS_AS(random_connected_graph(5, 6, 1), GraphError);
  CHECK_THROWS_AS(random_connected_graph(1, 0, 1), GraphError);
}

TEST_CASE("spectral bounds and oracle agreement on random graphs") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + uniform_index(rng, 29);
    const std::size_t max_chords = n >= 3 ? n * (n - 3) / 2 : 0;
    const std::size_t extra = max_chords ? uniform_index(rng, max_chords + 1) : 0;
    const CommGraph g = random_connected_graph(n, extra, rng());
    CAPTURE(n);
    CAPTURE(trial);
    REQUIRE(is_connected(g));
    CHECK(lambda_min_d_plus_a(g) >= -1e-12);
    CHECK(lambda_max_normalized_laplacian(g) <= 2.0 + 1e-12);

    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j : g.neighbors(i)) CHECK(g.has_edge(j, i));

    const auto ours = symmetric_eigenvalues(g.degree_matrix() + g.adjacency());
    const auto ref = oracle::eigenvalues(oracle::d_plus_a(g));
    REQUIRE(ours.size() == ref.size());
    const double tol = n <= 6 ? 1e-8 : 1e-9 * static_cast<double>(n);
    for (std::size_t k = 0; k < ref.size(); ++k) CHECK(std::abs(ours[k] - ref[k]) < tol);

    const auto ln = symmetric_eigenvalues(g.normalized_laplacian());
    const auto ln_ref = oracle::eigenvalues(oracle::normalized_laplacian(g));
    for (std::size_t k = 0; k < ln.size(); ++k) CHECK(std::abs(ln[k] - ln_ref[k]) < 1e-9);
  }
}

TEST_CASE("Jacobi solver on dense symmetric matrices") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto n = static_cast<Eigen::Index>(1 + uniform_index(rng, 8));
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j <= i; ++j) m(i, j) = m(j, i) = uniform(rng, -3.0, 3.0);
    const auto ours = symmetric_eigenvalues(m);
    const auto ref = oracle::eigenvalues(m);
    for (std::size_t k = 0; k < ref.size(); ++k) CHECK(std::abs(ours[k] - ref[k]) < 1e-10);
  }
}
