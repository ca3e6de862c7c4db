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

#include <cmath>
#include <random>

#include "nashadmm/game.hpp"
#include "nashadmm/random.hpp"
#include "oracles.hpp"

using namespace nashadmm;

namespace {

// Two users on two links each, plus one user alone on a third link.
WanetGame small_wanet(double chi = 10.0) {
  return WanetGame({10.0, 10.0, 10.0}, {{0, 1}, {0, 1}, {2}}, 1.0,
                   std::vector<double>(3, chi), 10.0);
}

std::vector<double> random_interior(std::mt19937_64& rng, const ActionBox& box,
                                    double margin) {
  std::vector<double> x(box.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] = uniform(rng, box.lower(i) + margin, box.upper(i) - margin);
  return x;
}

// Profiles in which every link keeps a residual capacity of at least 1.
std::vector<double> feasible_wanet_point(std::mt19937_64& rng, const WanetGame& g) {
  std::vector<double> x(g.num_players());
  for (;;) {
    for (double& v : x) v = uniform(rng, 0.05, 3.0);
    bool ok = true;
    for (std::size_t j = 0; j < g.num_links(); ++j) ok &= g.capacities()[j] - g.load(j, x) >= 1.0;
    if (ok) return x;
  }
}

}  // namespace

TEST_CASE("action box") {
  ActionBox box({0.0, -1.0}, {10.0, 1.0});
  CHECK(box.project(0, -3.0) == 0.0);
  CHECK(box.project(0, 11.0) == 10.0);
  CHECK(box.project(1, 0.25) == 0.25);
  CHECK(box.contains(std::vector<double>{0.0, 1.0}));
  CHECK_FALSE(box.contains(std::vector<double>{0.0, 1.5}));
  CHECK_THROWS_AS(ActionBox({1.0}, {0.0}), GameError);
  CHECK_THROWS_AS(ActionBox({0.0}, {INFINITY}), GameError);
  CHECK_THROWS_AS(ActionBox({0.0}, {1.0, 2.0}), GameError);
}

TEST_CASE("wanet cost at hand-evaluated points") {
  const WanetGame g = small_wanet();
  const std::vector<double> zero(3, 0.0);
  CHECK(std::abs(g.cost(0, zero) - 0.2) < 1e-15);
  CHECK(std::abs(g.cost(2, zero) - 0.1) < 1e-15);

  const WanetGame no_utility = small_wanet(0.0);
  CHECK(std::abs(no_utility.cost(0, zero) - (1.0 / 10 + 1.0 / 10)) < 1e-15);

  // Own flow zero: the log term vanishes whatever the others send.
  const std::vector<double> x{0.0, 3.0, 1.0};
  CHECK(std::abs(g.cost(0, x) - 2.0 / 7.0) < 1e-14);
}

TEST_CASE("wanet gradient at hand-evaluated points") {
  const WanetGame g = small_wanet();
  const std::vector<double> zero(3, 0.0);
  CHECK(std::abs(g.grad(0, zero) - (-9.98)) < 1e-14);
  CHECK(std::abs(small_wanet(0.0).grad(0, zero) - 2.0 / 100.0) < 1e-15);
  CHECK(std::abs(small_wanet(0.0).grad(2, zero) - 1.0 / 100.0) < 1e-15);

  const std::vector<double> ones(3, 1.0);
  for (std::size_t i = 0; i < 3; ++i) {
    const double a = g.grad(i, ones);
    CHECK(std::abs(a - oracle::fd_grad(g, i, ones)) / std::max(1.0, std::abs(a)) < 1e-6);
  }
}

TEST_CASE("wanet barrier guard") {
  const WanetGame g = small_wanet();
  const std::vector<double> jam{6.0, 4.0, 0.0};
  CHECK(g.guard_activations(jam) == 2);
  const GradEval e = g.grad_eval(0, jam);
  CHECK(e.guard_hits == 2);
  CHECK(std::isfinite(e.value));
  CHECK(std::abs(e.value - (2.0 / (1e-12) - 10.0 / 7.0)) < 1e-3);
  CHECK(std::isfinite(g.cost(0, jam)));
  CHECK(g.guard_activations(std::vector<double>{1.0, 1.0, 1.0}) == 0);
}

TEST_CASE("wanet validation") {
  CHECK_THROWS_AS(WanetGame({10.0}, {{1}}, 1.0, {1.0}, 10.0), GameError);
  CHECK_THROWS_AS(WanetGame({10.0}, {{0}}, 0.0, {1.0}, 10.0), GameError);
  CHECK_THROWS_AS(WanetGame({10.0}, {{0}}, 1.0, {1.0, 2.0}, 10.0), GameError);
  CHECK_THROWS_AS(WanetGame({-1.0}, {{0}}, 1.0, {1.0}, 10.0), GameError);
  CHECK_THROWS_AS(WanetGame({10.0}, {{}}, 1.0, {1.0}, 10.0), GameError);
}

TEST_CASE("default wanet instance") {
  const WanetInstance a = default_wanet_instance(7);
  const WanetInstance b = default_wanet_instance(7);
  CHECK(a.game.routes() == b.game.routes());
  CHECK(a.graph.edges() == b.graph.edges());
  CHECK(a.game.num_players() == 15);
  CHECK(a.game.num_links() == 16);
  for (double c : a.game.capacities()) CHECK(c == 10.0);
  for (std::size_t i = 0; i < 15; ++i) {
    CHECK(a.game.box().lower(i) == 0.0);
    CHECK(a.game.box().upper(i) == 10.0);
    CHECK(a.game.routes()[i].size() >= 1);
    CHECK(a.game.routes()[i].size() <= 3);
  }
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto routes = random_routes(15, 16, seed);
    std::vector<int> used(16, 0);
    for (const auto& r : routes)
      for (std::size_t l : r) used[l] = 1;
    for (int u : used) CHECK(u == 1);
  }
  CHECK(is_connected(a.graph));
}

TEST_CASE("quadratic equilibria") {
  QuadraticGame decoupled(Eigen::Vector2d(1, 1), Eigen::Matrix2d::Zero(),
                          Eigen::Vector2d(-0.3, 0.7), ActionBox::uniform(2, -5, 5));
  const Eigen::VectorXd x = quadratic_ne(decoupled);
  CHECK(std::abs(x(0) - 0.3) < 1e-15);
  CHECK(std::abs(x(1) + 0.7) < 1e-15);

  Eigen::Matrix2d b;
  b << 0, 1, 1, 0;
  QuadraticGame coupled(Eigen::Vector2d(2, 2), b, Eigen::Vector2d(-3, -3),
                        ActionBox::uniform(2, -5, 5));
  const Eigen::VectorXd y = quadratic_ne(coupled);
  CHECK(std::abs(y(0) - 1.0) < 1e-14);
  CHECK(std::abs(y(1) - 1.0) < 1e-14);

  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const QuadraticGame g = random_quadratic_game(5, seed);
    const Eigen::VectorXd ne = quadratic_ne(g);
    const std::vector<double> p = oracle::to_std(ne);
    for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(g.grad(i, p)) < 1e-12);
    CHECK((ne - oracle::quadratic_stationary(g)).cwiseAbs().maxCoeff() < 1e-12);
  }

  QuadraticGame outside(Eigen::Vector2d(1, 1), Eigen::Matrix2d::Zero(),
                        Eigen::Vector2d(-9, 0), ActionBox::uniform(2, -5, 5));
  CHECK_THROWS_AS(quadratic_ne(outside), GameError);
  QuadraticGame singular(Eigen::Vector2d(1, 1), b, Eigen::Vector2d(0, 0),
                         ActionBox::uniform(2, -5, 5));
  CHECK_THROWS_AS(quadratic_ne(singular), GameError);
  CHECK_THROWS_AS(QuadraticGame(Eigen::Vector2d(1, 1), Eigen::Matrix2d::Identity(),
                                Eigen::Vector2d(0, 0), ActionBox::uniform(2, -5, 5)),
                  GameError);
}

TEST_CASE("quadratic equilibria pass the grid best-response check") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const QuadraticGame g = random_quadratic_game(4, seed);
    const std::vector<double> ne = oracle::to_std(quadratic_ne(g));
    for (std::size_t i = 0; i < 4; ++i) {
      double step = 0.0;
      const double br = oracle::grid_best_response(g, i, ne, 2001, &step);
      CHECK(std::abs(br - ne[i]) <= step);
    }
  }
}

TEST_CASE("gradients match central differences at seeded interior points") {
  std::mt19937_64 rng(11);
  const QuadraticGame q = random_quadratic_game(5, 3);
  const WanetInstance w = default_wanet_instance(7);
  for (int s = 0; s < 100; ++s) {
    const auto xq = random_interior(rng, q.box(), 0.01);
    for (std::size_t i = 0; i < 5; ++i) {
      const double a = q.grad(i, xq);
      CHECK(std::abs(a - oracle::fd_grad(q, i, xq)) / std::max(1.0, std::abs(a)) < 1e-6);
    }
    const auto xw = feasible_wanet_point(rng, w.game);
    for (std::size_t i = 0; i < 15; ++i) {
      const double a = w.game.grad(i, xw);
      CHECK(std::abs(a - oracle::fd_grad(w.game, i, xw)) / std::max(1.0, std::abs(a)) <
            1e-6);
    }
  }
}

TEST_CASE("quadratic pseudo-gradient is strictly monotone") {
  std::mt19937_64 rng(17);
  const QuadraticGame g = random_quadratic_game(6, 4);
  for (int s = 0; s < 100; ++s) {
    const auto x = random_interior(rng, g.box(), 0.0);
    const auto y = random_interior(rng, g.box(), 0.0);
    const Eigen::VectorXd fx = pseudo_gradient(g, x);
    const Eigen::VectorXd fy = pseudo_gradient(g, y);
    const Eigen::Map<const Eigen::VectorXd> ex(x.data(), 6), ey(y.data(), 6);
    CHECK((fx - fy).dot(ex - ey) > 0.0);
  }
}

TEST_CASE("wanet cost is convex in the own action") {
  std::mt19937_64 rng(23);
  const WanetInstance w = default_wanet_instance(7);
  const double h = 1e-3;
  for (int s = 0; s < 100; ++s) {
    auto x = feasible_wanet_point(rng, w.game);
    for (std::size_t i = 0; i < 15; ++i) {
      const double xi = x[i];
      const double mid = w.game.cost(i, x);
      x[i] = xi + h;
      const double up = w.game.cost(i, x);
      x[i] = xi - h;
      const double down = w.game.cost(i, x);
      x[i] = xi;
      CHECK(up - 2.0 * mid + down >= -1e-9);
    }
  }
}

TEST_CASE("cocoercivity estimate") {
  QuadraticGame iso(Eigen::Vector2d(2, 2), Eigen::Matrix2d::Zero(),
                    Eigen::Vector2d(0, 0), ActionBox::uniform(2, -1, 1));
  CHECK(std::abs(estimate_sigma_f(iso, iso.box(), 200, 1) - 0.5) < 1e-12);

  // Symmetric positive definite 3x3 map: every ratio is at least
  // lambda_min / lambda_max^2.
  Eigen::Matrix3d b;
  b << 0, 0.5, -0.3, 0.5, 0, 0.4, -0.3, 0.4, 0;
  const Eigen::Vector3d a(2.0, 1.5, 3.0);
  QuadraticGame spd(a, b, Eigen::Vector3d(0.1, -0.2, 0.3), ActionBox::uniform(3, -2, 2));
  const auto eig = oracle::eigenvalues(spd.jacobian());
  REQUIRE(eig.front() > 0.0);
  const double bound = eig.front() / (eig.back() * eig.back());
  const double est = estimate_sigma_f(spd, spd.box(), 2000, 9);
  CHECK(est >= bound - 1e-12);
  CHECK(est <= 1.0 / eig.front() + 1e-12);

  const Eigen::Vector2d p(0.5, 0.5), q(-0.5, 0.25);
  std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> pairs{{p, p}, {p, q}};
  CHECK(std::abs(estimate_sigma_f(iso, pairs) - 0.5) < 1e-12);
  std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> flat{{p, p}};
  CHECK_THROWS_AS(estimate_sigma_f(iso, flat), GameError);
  CHECK_THROWS_AS(estimate_sigma_f(iso, iso.box(), 1, 1), GameError);
}
