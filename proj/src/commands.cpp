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

#include "nashadmm/commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>

#include "nashadmm/admm.hpp"
#include "nashadmm/baseline.hpp"
#include "nashadmm/config.hpp"
#include "nashadmm/spectral.hpp"

namespace nashadmm {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string list(const Eigen::VectorXd& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += num(v(i));
  }
  return s;
}

std::string list(const std::vector<double>& v) {
  return list(Eigen::Map<const Eigen::VectorXd>(v.data(),
                                                static_cast<Eigen::Index>(v.size())));
}

void kv(std::ostream& out, const std::string& key, const std::string& value) {
  out << key << '=' << value << '\n';
}

void write_trace_file(const std::string& path,
                      const std::vector<IterationRecord>& trace, bool timing) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error(path + ": cannot open trace file for writing");
  write_trace_csv(f, trace, timing);
  if (!f) throw std::runtime_error(path + ": write failed");
}

RunConfig load_with(const std::string& path, const CommandOptions& options) {
  RunConfig cfg = load_config(path);
  cfg.admm.threads = options.threads;
  if (cfg.baseline) cfg.baseline->threads = options.threads;
  if (options.sigma_f) cfg.sigma_f = options.sigma_f;
  return cfg;
}

int exit_for(Termination t) {
  switch (t) {
    case Termination::kConverged: return kExitConverged;
    case Termination::kIterationBudget: return kExitBudget;
    case Termination::kDiverged: return kExitError;
  }
  return kExitError;
}

void run_summary(std::ostream& out, const std::string& prefix, const RunResult& r) {
  const IterationRecord& last = r.trace.back();
  kv(out, prefix + "termination", to_string(r.reason));
  kv(out, prefix + "iterations", std::to_string(r.iterations()));
  kv(out, prefix + "consensus_error", num(last.consensus_error));
  kv(out, prefix + "ne_residual", num(last.ne_residual));
  kv(out, prefix + "guard_activations", std::to_string(last.guard_activations));
  if (r.diverged_at) kv(out, prefix + "diverged_at", std::to_string(*r.diverged_at));
}

/// Runs `body`, turning any exception into a message and exit status 1.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

std::string stem_with(const std::string& path, const std::string& suffix) {
  std::filesystem::path p(path);
  const std::string ext = p.has_extension() ? p.extension().string() : ".csv";
  p.replace_extension();
  return p.string() + suffix + ext;
}

}  // namespace

void write_trace_csv(std::ostream& out, const std::vector<IterationRecord>& trace,
                     bool timing) {
  out << "k,player,action,consensus_error,ne_residual,guard_activations,elapsed_us\n";
  for (const IterationRecord& rec : trace) {
    const std::string tail = num(rec.consensus_error) + ',' + num(rec.ne_residual) +
                             ',' + std::to_string(rec.guard_activations) + ',' +
                             std::to_string(timing ? rec.elapsed_us : 0) + '\n';
    for (Eigen::Index i = 0; i < rec.actions.size(); ++i)
      out << rec.k << ',' << i << ',' << num(rec.actions(i)) << ',' << tail;
  }
}

std::string resolve_output(const std::string& configured,
                           const CommandOptions& options) {
  std::optional<std::string> dir = options.output_dir;
  if (!dir) {
    if (const char* env = std::getenv(kOutputDirEnv); env && *env) dir = env;
  }
  if (!dir) return configured;
  return (std::filesystem::path(*dir) /
          std::filesystem::path(configured).filename())
      .string();
}

int cmd_run(const std::string& config_path, const CommandOptions& options,
            std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig cfg = load_with(config_path, options);
    if (cfg.sigma_f) {
      const ConditionCheck chk = check_condition(*cfg.sigma_f, cfg.admm, cfg.graph);
      if (!chk.satisfied)
        err << "warning: sufficient convergence condition violated (sigma_f "
            << num(*cfg.sigma_f) << " <= threshold " << num(chk.threshold)
            << "); running anyway\n";
    }
    const RunResult r = run_admm(*cfg.game, cfg.graph, cfg.admm,
                                 init_state(*cfg.game, cfg.graph, cfg.x0));
    const std::string path = resolve_output(cfg.output, options);
    write_trace_file(path, r.trace, options.timing);

    kv(out, "command", "run");
    run_summary(out, "", r);
    kv(out, "actions", list(r.state.actions()));
    kv(out, "trace", path);
    if (r.reason == Termination::kDiverged)
      err << "error: iterates became non-finite at iteration " << *r.diverged_at
          << '\n';
    return exit_for(r.reason);
  });
}

int cmd_compare(const std::string& config_path, const CommandOptions& options,
                std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig cfg = load_with(config_path, options);
    if (!cfg.baseline) throw ConfigError("baseline: missing required block");
    const ComparisonReport rep =
        cfg.self_compare
            ? compare_self(*cfg.game, cfg.graph, cfg.admm, cfg.compare_tol, cfg.x0)
            : compare(*cfg.game, cfg.graph, cfg.admm, *cfg.baseline,
                      cfg.compare_tol, cfg.x0);
    const std::string admm_path =
        resolve_output(stem_with(cfg.output, "_admm"), options);
    const std::string base_path =
        resolve_output(stem_with(cfg.output, "_baseline"), options);
    write_trace_file(admm_path, rep.admm.trace, options.timing);
    write_trace_file(base_path, rep.baseline.trace, options.timing);

    kv(out, "command", "compare");
    kv(out, "tol", num(rep.tol));
    run_summary(out, "admm_", rep.admm);
    kv(out, "baseline_solver", cfg.self_compare ? "admm" : "gradient");
    // A baseline that never reached the tolerance is reported as diverged.
    kv(out, "baseline_status", rep.baseline.converged() ? "converged" : "diverged");
    run_summary(out, "baseline_", rep.baseline);
    if (!cfg.self_compare) kv(out, "baseline_gamma", num(rep.baseline_gamma));
    std::string sweep;
    for (const SweepOutcome& s : rep.sweep) {
      if (!sweep.empty()) sweep += ',';
      sweep += num(s.gamma) + ':' + to_string(s.reason) + ':' +
               std::to_string(s.iterations);
    }
    if (!cfg.self_compare) kv(out, "sweep", sweep);
    kv(out, "ratio", rep.ratio ? num(*rep.ratio) : "undefined");
    kv(out, "ratio_is_lower_bound", rep.ratio_is_lower_bound ? "true" : "false");
    kv(out, "admm_trace", admm_path);
    kv(out, "baseline_trace", base_path);
    if (rep.admm.reason == Termination::kDiverged)
      err << "error: ADMM iterates became non-finite at iteration "
          << *rep.admm.diverged_at << '\n';
    return exit_for(rep.admm.reason);
  });
}

int cmd_check(const std::string& config_path, const CommandOptions& options,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig cfg = load_with(config_path, options);
    const bool connected = is_connected(cfg.graph) && cfg.graph.size() >= 2;
    kv(out, "command", "check");
    kv(out, "players", std::to_string(cfg.graph.size()));
    kv(out, "connected", connected ? "true" : "false");
    if (!connected) {
      err << "error: communication graph is disconnected (connectivity "
             "assumption violated)\n";
      return kExitError;
    }
    kv(out, "lambda_min_d_plus_a", num(lambda_min_d_plus_a(cfg.graph)));
    kv(out, "lambda_max_normalized_laplacian",
       num(lambda_max_normalized_laplacian(cfg.graph)));

    std::string source = "given";
    double sigma = 0.0;
    if (cfg.sigma_f) {
      sigma = *cfg.sigma_f;
    } else {
      sigma = estimate_sigma_f(*cfg.game, cfg.game->box(), cfg.sigma_samples,
                               cfg.seed);
      source = "estimated";
    }
    const ConditionCheck chk = check_condition(sigma, cfg.admm, cfg.graph);
    kv(out, "c", num(cfg.admm.penalty));
    kv(out, "beta_min", num(chk.beta_min));
    kv(out, "threshold", num(chk.threshold));
    kv(out, "sigma_f", num(sigma));
    kv(out, "sigma_f_source", source);
    kv(out, "condition", chk.satisfied ? "satisfied" : "violated");
    kv(out, "margin", num(chk.margin));
    return kExitConverged;
  });
}

int cmd_spectra(const std::string& config_path, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig cfg = load_config(config_path);
    const CommGraph& g = cfg.graph;
    kv(out, "command", "spectra");
    kv(out, "nodes", std::to_string(g.size()));
    kv(out, "edges", std::to_string(g.edges().size()));
    kv(out, "connected", is_connected(g) ? "true" : "false");
    std::vector<double> degrees;
    for (std::size_t i = 0; i < g.size(); ++i)
      degrees.push_back(static_cast<double>(g.degree(i)));
    kv(out, "degrees", list(degrees));
    kv(out, "eig_d_plus_a",
       list(symmetric_eigenvalues(g.degree_matrix() + g.adjacency())));
    kv(out, "eig_laplacian", list(symmetric_eigenvalues(g.laplacian())));
    bool isolated = false;
    for (std::size_t i = 0; i < g.size(); ++i) isolated |= g.degree(i) == 0;
    kv(out, "eig_normalized_laplacian",
       isolated ? "undefined"
                : list(symmetric_eigenvalues(g.normalized_laplacian())));
    return kExitConverged;
  });
}

int cmd_print_default_config(std::ostream& out) {
  out << default_config().dump(2) << '\n';
  return kExitConverged;
}

}  // namespace nashadmm
