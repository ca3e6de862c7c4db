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

#include "nashadmm/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "nashadmm/random.hpp"
#include "nashadmm/types.hpp"

namespace nashadmm {

ActionBox::ActionBox(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.size() != upper_.size())
    throw GameError("action box bounds have different lengths");
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i]))
      throw GameError("action interval " + std::to_string(i) +
                      " must be bounded");
    if (lower_[i] > upper_[i])
      throw GameError("action interval " + std::to_string(i) + " is empty");
  }
}

ActionBox ActionBox::uniform(std::size_t n, double lower, double upper) {
  return ActionBox(std::vector<double>(n, lower), std::vector<double>(n, upper));
}

double ActionBox::project(std::size_t i, double v) const {
  return std::clamp(v, lower_[i], upper_[i]);
}

bool ActionBox::contains(std::size_t i, double v) const {
  return v >= lower_[i] && v <= upper_[i];
}

bool ActionBox::contains(std::span<const double> x) const {
  if (x.size() != size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!contains(i, x[i])) return false;
  return true;
}

Eigen::VectorXd pseudo_gradient(const GameModel& game,
                                std::span<const double> x) {
  const std::size_t n = game.num_players();
  Eigen::VectorXd f(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    f(static_cast<Eigen::Index>(i)) = game.grad(i, x);
  return f;
}

double estimate_sigma_f(
    const GameModel& game,
    std::span<const std::pair<Eigen::VectorXd, Eigen::VectorXd>> pairs) {
  double best = std::numeric_limits<double>::infinity();
  bool informative = false;
  for (const auto& [x, y] : pairs) {
    const Eigen::VectorXd df =
        pseudo_gradient(game, as_span(x)) - pseudo_gradient(game, as_span(y));
    const double norm = df.norm();
    if (!(norm > 1e-12)) continue;
    informative = true;
    best = std::min(best, df.dot(x - y) / (norm * norm));
  }
  if (!informative)
    throw GameError("cocoercivity not estimable: pseudo-gradient is constant "
                    "on every sampled pair");
  return best;
}

double estimate_sigma_f(const GameModel& game, const ActionBox& box,
                        std::size_t samples, std::uint64_t seed) {
  if (samples < 2) throw GameError("estimate_sigma_f needs at least 2 samples");
  if (box.size() != game.num_players())
    throw GameError("box dimension does not match the number of players");
  std::mt19937_64 rng(seed);
  const auto n = static_cast<Eigen::Index>(box.size());
  auto draw = [&] {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto k = static_cast<std::size_t>(i);
      v(i) = uniform(rng, box.lower(k), box.upper(k));
    }
    return v;
  };
  std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> pairs;
  pairs.reserve(samples);
  for (std::size_t s = 0; s < samples; ++s) {
    Eigen::VectorXd x = draw();
    Eigen::VectorXd y = draw();
    pairs.emplace_back(std::move(x), std::move(y));
  }
  return estimate_sigma_f(game, pairs);
}

}  // namespace nashadmm
