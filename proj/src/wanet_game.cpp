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

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "nashadmm/game.hpp"
#include "nashadmm/random.hpp"

namespace nashadmm {

WanetGame::WanetGame(std::vector<double> capacities,
                     std::vector<std::vector<std::size_t>> routes, double kappa,
                     std::vector<double> chi, double max_flow, double eps_guard)
    : capacities_(std::move(capacities)),
      routes_(std::move(routes)),
      link_users_(capacities_.size()),
      kappa_(kappa),
      chi_(std::move(chi)),
      eps_guard_(eps_guard),
      box_(ActionBox::uniform(routes_.size(), 0.0, max_flow)) {
  if (routes_.empty()) throw GameError("wanet game needs at least one user");
  if (capacities_.empty()) throw GameError("wanet game needs at least one link");
  if (!(kappa_ > 0.0)) throw GameError("kappa must be positive");
  if (!(eps_guard_ > 0.0)) throw GameError("eps_guard must be positive");
  if (!(max_flow >= 0.0) || !std::isfinite(max_flow))
    throw GameError("max_flow must be finite and non-negative");
  if (chi_.size() != routes_.size())
    throw GameError("chi has " + std::to_string(chi_.size()) +
                    " entries for " + std::to_string(routes_.size()) + " users");
  for (double c : capacities_)
    if (!(c > 0.0) || !std::isfinite(c))
      throw GameError("link capacities must be positive and finite");
  for (double c : chi_)
    if (!(c >= 0.0) || !std::isfinite(c))
      throw GameError("chi values must be non-negative and finite");

  for (std::size_t i = 0; i < routes_.size(); ++i) {
    auto& route = routes_[i];
    if (route.empty())
      throw GameError("route of user " + std::to_string(i) + " is empty");
    std::sort(route.begin(), route.end());
    route.erase(std::unique(route.begin(), route.end()), route.end());
    for (std::size_t link : route) {
      if (link >= capacities_.size())
        throw GameError("route of user " + std::to_string(i) +
                        " references unknown link " + std::to_string(link));
      link_users_[link].push_back(i);
    }
  }
}

double WanetGame::load(std::size_t link, std::span<const double> x) const {
  double total = 0.0;
  for (std::size_t w : link_users_.at(link)) total += x[w];
  return total;
}

std::size_t WanetGame::guard_activations(std::span<const double> x) const {
  std::size_t hits = 0;
  for (std::size_t j = 0; j < capacities_.size(); ++j)
    if (capacities_[j] - load(j, x) < eps_guard_) ++hits;
  return hits;
}

double WanetGame::cost(std::size_t i, std::span<const double> x) const {
  double barrier = 0.0;
  for (std::size_t j : routes_.at(i))
    barrier += kappa_ / std::max(capacities_[j] - load(j, x), eps_guard_);
  return barrier - chi_[i] * std::log(x[i] + 1.0);
}

GradEval WanetGame::grad_eval(std::size_t i, std::span<const double> x) const {
  GradEval out;
  for (std::size_t j : routes_.at(i)) {
    double residual = capacities_[j] - load(j, x);
    if (residual < eps_guard_) {
      residual = eps_guard_;
      ++out.guard_hits;
    }
    out.value += kappa_ / (residual * residual);
  }
  out.value -= chi_[i] / (x[i] + 1.0);
  return out;
}

std::vector<std::vector<std::size_t>> random_routes(std::size_t users,
                                                    std::size_t links,
                                                    std::uint64_t seed) {
  if (users == 0 || links == 0)
    throw GameError("random_routes needs at least one user and one link");
  const std::size_t max_len = std::min<std::size_t>(3, links);
  if (users * max_len < links)
    throw GameError("not enough users to cover every link with routes of at "
                    "most 3 links");

  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::size_t>> routes(users);
  std::vector<char> covered(links, 0);
  for (auto& route : routes) {
    const std::size_t len = 1 + uniform_index(rng, max_len);
    while (route.size() < len) {
      const std::size_t link = uniform_index(rng, links);
      if (std::find(route.begin(), route.end(), link) != route.end()) continue;
      route.push_back(link);
      covered[link] = 1;
    }
  }
  auto link_uses = [&](std::size_t link) {
    std::size_t uses = 0;
    for (const auto& r : routes)
      uses += static_cast<std::size_t>(std::count(r.begin(), r.end(), link));
    return uses;
  };
  // Hand each uncovered link to a random user with room, or, when every route
  // is full, let it replace a link that another route also covers.
  for (std::size_t link = 0; link < links; ++link) {
    if (covered[link]) continue;
    std::vector<std::size_t> open;
    for (std::size_t u = 0; u < users; ++u)
      if (routes[u].size() < max_len) open.push_back(u);
    if (!open.empty()) {
      routes[open[uniform_index(rng, open.size())]].push_back(link);
    } else {
      bool placed = false;
      for (auto& route : routes) {
        for (auto& l : route) {
          if (link_uses(l) > 1) {
            l = link;
            placed = true;
            break;
          }
        }
        if (placed) break;
      }
      if (!placed) throw GameError("random_routes could not cover every link");
    }
    covered[link] = 1;
  }
  for (auto& route : routes) std::sort(route.begin(), route.end());
  return routes;
}

WanetInstance default_wanet_instance(std::uint64_t seed) {
  constexpr std::size_t kUsers = 15;
  constexpr std::size_t kLinks = 16;
  WanetGame game(std::vector<double>(kLinks, 10.0),
                 random_routes(kUsers, kLinks, seed), /*kappa=*/1.0,
                 std::vector<double>(kUsers, 10.0), /*max_flow=*/10.0,
                 /*eps_guard=*/1e-6);
  return {std::move(game), random_connected_graph(kUsers, 5, seed)};
}

}  // namespace nashadmm
