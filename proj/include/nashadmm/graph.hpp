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

#ifndef NASHADMM_GRAPH_HPP_
#define NASHADMM_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace nashadmm {

/// Thrown when a graph cannot serve as a communication topology.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Edge = std::pair<std::size_t, std::size_t>;

/**
 * Undirected, unweighted communication topology over players 0..n-1.
 *
 * Edges are stored normalized (first < second), sorted and duplicate-free.
 * Self-loops are rejected at construction. The object is immutable once
 * built, so it may be shared freely between threads.
 */
class CommGraph {
 public:
  CommGraph(std::size_t n, std::vector<Edge> edges);

  static CommGraph ring(std::size_t n);
  static CommGraph complete(std::size_t n);
  static CommGraph path(std::size_t n);

  std::size_t size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Sorted neighbor list of player i. Throws std::out_of_range.
  std::span<const std::size_t> neighbors(std::size_t i) const;
  std::size_t degree(std::size_t i) const { return neighbors(i).size(); }
  bool has_edge(std::size_t i, std::size_t j) const;

  Eigen::MatrixXd adjacency() const;
  Eigen::MatrixXd degree_matrix() const;
  Eigen::MatrixXd laplacian() const;
  /// D^{-1/2} (D - A) D^{-1/2}; throws GraphError if any node is isolated.
  Eigen::MatrixXd normalized_laplacian() const;

  bool operator==(const CommGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adj_;
};

std::span<const std::size_t> neighbors(const CommGraph& g, std::size_t i);

/// True iff every node is reachable from node 0. A single node is connected.
bool is_connected(const CommGraph& g);

/// Throws GraphError unless g is connected with at least two nodes, which is
/// what the solvers need for every |N_i| to be positive.
void require_solver_graph(const CommGraph& g);

/// Smallest eigenvalue of D + A. Requires a connected graph with n >= 2.
double lambda_min_d_plus_a(const CommGraph& g);

/// Largest eigenvalue of the normalized Laplacian. Requires a connected graph
/// with n >= 2.
double lambda_max_normalized_laplacian(const CommGraph& g);

/// Ring over 0..n-1 plus `extra_edges` distinct chords chosen by a generator
/// seeded with `seed`. At most n(n-3)/2 chords exist.
CommGraph random_connected_graph(std::size_t n, std::size_t extra_edges,
                                 std::uint64_t seed);

}  // namespace nashadmm

#endif  // NASHADMM_GRAPH_HPP_
