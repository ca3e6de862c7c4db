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

#ifndef NASHADMM_COMMANDS_HPP_
#define NASHADMM_COMMANDS_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nashadmm/metrics.hpp"

namespace nashadmm {

/// Environment variable that redirects every trace file into a directory.
inline constexpr const char* kOutputDirEnv = "NASHADMM_OUTPUT_DIR";

struct CommandOptions {
  /// Per-player worker threads for the solvers.
  std::size_t threads = 1;
  /// Write wall-clock microseconds into the trace; otherwise the column is 0
  /// so traces are byte-identical across runs.
  bool timing = false;
  /// Overrides both admm.sigma_f and the sampled estimate in `check`.
  std::optional<double> sigma_f;
  /// Overrides $NASHADMM_OUTPUT_DIR.
  std::optional<std::string> output_dir;
};

/// Exit statuses shared by the subcommands.
inline constexpr int kExitConverged = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitBudget = 2;

/// Long-format trace: one row per recorded iteration and player.
void write_trace_csv(std::ostream& out, const std::vector<IterationRecord>& trace,
                     bool timing);

/// Where a configured output file lands once the directory override applies.
std::string resolve_output(const std::string& configured,
                           const CommandOptions& options);

int cmd_run(const std::string& config_path, const CommandOptions& options,
            std::ostream& out, std::ostream& err);
int cmd_compare(const std::string& config_path, const CommandOptions& options,
                std::ostream& out, std::ostream& err);
int cmd_check(const std::string& config_path, const CommandOptions& options,
              std::ostream& out, std::ostream& err);
int cmd_spectra(const std::string& config_path, std::ostream& out,
                std::ostream& err);
int cmd_print_default_config(std::ostream& out);

}  // namespace nashadmm

#endif  // NASHADMM_COMMANDS_HPP_
