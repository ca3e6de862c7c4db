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

#include "nashadmm/graph.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "nashadmm/random.hpp"
#include "nashadmm/spectral.hpp"

namespace nashadmm {

CommGraph::CommGraph(std::size_t n, std::vector<Edge> edges)
    : n_(n), adj_(n) {
  if (n == 0) throw GraphError("graph must have at least one node");
  for (auto& [a, b] : edges) {
    if (a >= n || b >= n)
      throw GraphError("edge {" + std::to_string(a) + "," + std::to_string(b) +
                       "} references a node outside 0.." +
                       std::to_string(n - 1));
    if (a == b)
      throw GraphError("self-loop on node " + std::to_string(a));
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  for (const auto& [a, b] : edges_) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

CommGraph CommGraph::ring(std::size_t n) {
  std::vector<Edge> e;
  if (n >= 2)
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return CommGraph(n, std::move(e));
}

CommGraph CommGraph::complete(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return CommGraph(n, std::move(e));
}

CommGraph CommGraph::path(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return CommGraph(n, std::move(e));
}

std::span<const std::size_t> CommGraph::neighbors(std::size_t i) const {
  if (i >= n_)
    throw std::out_of_range("player index " + std::to_string(i) +
                            " out of range for graph of size " +
                            std::to_string(n_));
  return adj_[i];
}

bool CommGraph::has_edge(std::size_t i, std::size_t j) const {
  const auto nb = neighbors(i);
  return std::binary_search(nb.begin(), nb.end(), j);
}

Eigen::MatrixXd CommGraph::adjacency() const {
  const auto n = static_cast<Eigen::Index>(n_);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [i, j] : edges_) {
    a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0;
    a(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = 1.0;
  }
  return a;
}

Eigen::MatrixXd CommGraph::degree_matrix() const {
  Eigen::VectorXd d(static_cast<Eigen::Index>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    d(static_cast<Eigen::Index>(i)) = static_cast<double>(adj_[i].size());
  return d.asDiagonal();
}

Eigen::MatrixXd CommGraph::laplacian() const {
  return degree_matrix() - adjacency();
}

Eigen::MatrixXd CommGraph::normalized_laplacian() const {
  Eigen::VectorXd inv_sqrt(static_cast<Eigen::Index>(n_));
  for (std::size_t i = 0; i < n_; ++i) {
    if (adj_[i].empty())
      throw GraphError("node " + std::to_string(i) +
                       " is isolated; normalized Laplacian undefined");
    inv_sqrt(static_cast<Eigen::Index>(i)) =
        1.0 / std::sqrt(static_cast<double>(adj_[i].size()));
  }
  return inv_sqrt.asDiagonal() * laplacian() * inv_sqrt.asDiagonal();
}

std::span<const std::size_t> neighbors(const CommGraph& g, std::size_t i) {
  return g.neighbors(i);
}

bool is_connected(const CommGraph& g) {
  const std::size_t n = g.size();
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == n;
}

void require_solver_graph(const CommGraph& g) {
  if (g.size() < 2)
    throw GraphError("solvers need at least two players, got " +
                     std::to_string(g.size()));
  if (!is_connected(g))
    throw GraphError(
        "communication graph is disconnected (connectivity assumption "
        "violated)");
}

double lambda_min_d_plus_a(const CommGraph& g) {
  require_solver_graph(g);
  return symmetric_eigenvalues(g.degree_matrix() + g.adjacency()).front();
}

double lambda_max_normalized_laplacian(const CommGraph& g) {
  require_solver_graph(g);
  return symmetric_eigenvalues(g.normalized_laplacian()).back();
}

CommGraph random_connected_graph(std::size_t n, std::size_t extra_edges,
                                 std::uint64_t seed) {
  if (n < 2) throw GraphError("random_connected_graph needs n >= 2");
  const std::size_t max_chords = n >= 3 ? n * (n - 3) / 2 : 0;
  if (extra_edges > max_chords)
    throw GraphError("requested " + std::to_string(extra_edges) +
                     " chords but a ring on " + std::to_string(n) +
                     " nodes admits at most " + std::to_string(max_chords));

  CommGraph ring = CommGraph::ring(n);
  std::vector<Edge> candidates;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!ring.has_edge(i, j)) candidates.emplace_back(i, j);

  // Partial Fisher-Yates over the non-ring pairs.
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges = ring.edges();
  for (std::size_t k = 0; k < extra_edges; ++k) {
    const std::size_t remaining = candidates.size() - k;
    const std::size_t pick = k + static_cast<std::size_t>(uniform_index(rng, remaining));
    std::swap(candidates[k], candidates[pick]);
    edges.push_back(candidates[k]);
  }
  return CommGraph(n, std::move(edges));
}

}  // namespace nashadmm
