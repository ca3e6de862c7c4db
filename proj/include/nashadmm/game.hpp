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

#ifndef NASHADMM_GAME_HPP_
#define NASHADMM_GAME_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "nashadmm/graph.hpp"

namespace nashadmm {

class GameError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Product of closed scalar intervals [lower_i, upper_i], one per player.
class ActionBox {
 public:
  ActionBox(std::vector<double> lower, std::vector<double> upper);
  static ActionBox uniform(std::size_t n, double lower, double upper);

  std::size_t size() const { return lower_.size(); }
  double lower(std::size_t i) const { return lower_.at(i); }
  double upper(std::size_t i) const { return upper_.at(i); }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }

  /// Euclidean projection onto the i-th interval.
  double project(std::size_t i, double v) const;
  bool contains(std::size_t i, double v) const;
  bool contains(std::span<const double> x) const;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

/// A gradient value together with the number of clamped barrier
/// denominators met while computing it (zero for games without a barrier).
struct GradEval {
  double value = 0.0;
  std::size_t guard_hits = 0;
};

/**
 * N-player game with scalar actions. `cost(i, x)` is J_i at the full profile
 * x and `grad(i, x)` its partial derivative in x_i. Implementations are
 * immutable and reentrant.
 */
class GameModel {
 public:
  virtual ~GameModel() = default;

  virtual std::size_t num_players() const = 0;
  virtual const ActionBox& box() const = 0;
  virtual double cost(std::size_t i, std::span<const double> x) const = 0;
  virtual GradEval grad_eval(std::size_t i, std::span<const double> x) const = 0;

  double grad(std::size_t i, std::span<const double> x) const {
    return grad_eval(i, x).value;
  }
};

/// F(x) = (grad_i J_i(x))_i at a common profile x.
Eigen::VectorXd pseudo_gradient(const GameModel& game,
                                std::span<const double> x);

/**
 * Congestion game on a capacity-limited network. User i sends flow x_i along
 * route R_i (a set of link indices) and pays
 *
 *   J_i(x) = sum_{j in R_i} kappa / (C_j - load_j(x)) - chi_i log(x_i + 1)
 *
 * where load_j is the total flow of users whose route contains link j.
 * Residual capacities below `eps_guard` are clamped to `eps_guard` so both
 * cost and gradient stay finite away from the feasible region.
 */
class WanetGame final : public GameModel {
 public:
  WanetGame(std::vector<double> capacities,
            std::vector<std::vector<std::size_t>> routes, double kappa,
            std::vector<double> chi, double max_flow, double eps_guard = 1e-6);

  std::size_t num_players() const override { return routes_.size(); }
  const ActionBox& box() const override { return box_; }
  double cost(std::size_t i, std::span<const double> x) const override;
  GradEval grad_eval(std::size_t i, std::span<const double> x) const override;

  std::size_t num_links() const { return capacities_.size(); }
  const std::vector<double>& capacities() const { return capacities_; }
  const std::vector<std::vector<std::size_t>>& routes() const { return routes_; }
  const std::vector<std::size_t>& link_users(std::size_t link) const {
    return link_users_.at(link);
  }
  double kappa() const { return kappa_; }
  const std::vector<double>& chi() const { return chi_; }
  double eps_guard() const { return eps_guard_; }

  double load(std::size_t link, std::span<const double> x) const;
  /// Links whose residual capacity at x is below the guard.
  std::size_t guard_activations(std::span<const double> x) const;

 private:
  std::vector<double> capacities_;
  std::vector<std::vector<std::size_t>> routes_;
  std::vector<std::vector<std::size_t>> link_users_;
  double kappa_;
  std::vector<double> chi_;
  double eps_guard_;
  ActionBox box_;
};

/**
 * J_i(x) = a_i x_i^2 / 2 + x_i sum_{j != i} B_ij x_j + d_i x_i.
 * The pseudo-gradient is the affine map (diag(a) + B) x + d.
 */
class QuadraticGame final : public GameModel {
 public:
  QuadraticGame(Eigen::VectorXd a, Eigen::MatrixXd coupling, Eigen::VectorXd d,
                ActionBox box);

  std::size_t num_players() const override {
    return static_cast<std::size_t>(a_.size());
  }
  const ActionBox& box() const override { return box_; }
  double cost(std::size_t i, std::span<const double> x) const override;
  GradEval grad_eval(std::size_t i, std::span<const double> x) const override;

  const Eigen::VectorXd& a() const { return a_; }
  const Eigen::MatrixXd& coupling() const { return coupling_; }
  const Eigen::VectorXd& d() const { return d_; }
  /// diag(a) + B, the Jacobian of the pseudo-gradient.
  Eigen::MatrixXd jacobian() const;

 private:
  Eigen::VectorXd a_;
  Eigen::MatrixXd coupling_;
  Eigen::VectorXd d_;
  ActionBox box_;
};

/// Interior Nash equilibrium by solving (diag(a) + B) x = -d. Throws
/// GameError if the system is singular or the solution leaves the box.
Eigen::VectorXd quadratic_ne(const QuadraticGame& game);

/// Random instance with a strictly diagonally dominant symmetric Jacobian
/// and an equilibrium drawn inside [-1, 1]^n; the box is [-5, 5]^n.
QuadraticGame random_quadratic_game(std::size_t n, std::uint64_t seed);

struct WanetInstance {
  WanetGame game;
  CommGraph graph;
};

/// 15 users on 16 links with C_j = 10, chi_i = 10, kappa = 1, flows in
/// [0, 10]. Routes of 1-3 links and the communication graph are drawn from
/// `seed`; every link carries at least one user.
WanetInstance default_wanet_instance(std::uint64_t seed);

/// Seeded routes of 1-3 distinct links per user covering every link.
std::vector<std::vector<std::size_t>> random_routes(std::size_t users,
                                                    std::size_t links,
                                                    std::uint64_t seed);

/**
 * Sampling estimate of the cocoercivity constant of the pseudo-gradient on
 * the box: min over sampled pairs of <F(x)-F(y), x-y> / |F(x)-F(y)|^2.
 * Pairs with |F(x)-F(y)| <= 1e-12 are skipped. This upper-bounds the true
 * constant; it is not a certificate. Throws GameError when every pair is
 * degenerate.
 */
double estimate_sigma_f(const GameModel& game, const ActionBox& box,
                        std::size_t samples, std::uint64_t seed);

/// Same estimate over caller-supplied pairs of profiles.
double estimate_sigma_f(const GameModel& game,
                        std::span<const std::pair<Eigen::VectorXd, Eigen::VectorXd>> pairs);

}  // namespace nashadmm

#endif  // NASHADMM_GAME_HPP_
