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

#ifndef NASHADMM_RANDOM_HPP_
#define NASHADMM_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace nashadmm {

// std::uniform_*_distribution output differs between standard libraries;
// seeded instances must not, so draws go straight through the engine bits.

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

/// Integer in [0, bound). The modulo bias is irrelevant at the sizes used.
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

}  // namespace nashadmm

#endif  // NASHADMM_RANDOM_HPP_
