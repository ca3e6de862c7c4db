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

#ifndef NASHADMM_CONFIG_HPP_
#define NASHADMM_CONFIG_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "nashadmm/admm.hpp"
#include "nashadmm/baseline.hpp"
#include "nashadmm/game.hpp"
#include "nashadmm/graph.hpp"
#include "nashadmm/types.hpp"

namespace nashadmm {

/// Malformed configuration. The message starts with the offending field
/// path, e.g. "admm.beta[3]: must be positive".
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fully resolved experiment description.
struct RunConfig {
  std::uint64_t seed = 0;
  std::shared_ptr<const GameModel> game;
  CommGraph graph{1, {}};
  AdmmConfig admm;
  /// Initial estimates, one row per player.
  Matrix x0;
  std::optional<double> sigma_f;
  std::size_t sigma_samples = 2000;

  std::optional<BaselineConfig> baseline;
  /// Baseline block requested ADMM as its own comparator.
  bool self_compare = false;
  double compare_tol = 1e-4;

  std::string output = "trace.csv";
};

/// Builds a RunConfig from a parsed document; throws ConfigError.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

/// The default WANET experiment, with every default spelled out.
nlohmann::json default_config();

}  // namespace nashadmm

#endif  // NASHADMM_CONFIG_HPP_
