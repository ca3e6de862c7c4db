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

#ifndef NASHADMM_SPECTRAL_HPP_
#define NASHADMM_SPECTRAL_HPP_

#include <vector>

#include <Eigen/Dense>

namespace nashadmm {

/**
 * Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations,
 * returned in ascending order.
 *
 * Sweeps continue until the off-diagonal Frobenius norm falls below
 * `tol` times the matrix norm (or is exactly zero). Only the lower triangle
 * is trusted; the input is symmetrized first. Intended for the small dense
 * graph matrices used here (n up to a few hundred).
 */
std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& m,
                                          double tol = 1e-15,
                                          int max_sweeps = 100);

}  // namespace nashadmm

#endif  // NASHADMM_SPECTRAL_HPP_
