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

#include "nashadmm/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace nashadmm {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const json& require(const json& obj, const std::string& key,
                    const std::string& path) {
  if (!obj.contains(key)) fail(join(path, key), "missing required field");
  return obj.at(key);
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(path, "must be finite");
  return x;
}

double number_or(const json& obj, const std::string& key,
                 const std::string& path, double fallback) {
  return obj.contains(key) ? as_number(obj.at(key), join(path, key)) : fallback;
}

double positive_or(const json& obj, const std::string& key,
                   const std::string& path, double fallback) {
  const double x = number_or(obj, key, path, fallback);
  if (!(x > 0.0)) fail(join(path, key), "must be positive");
  return x;
}

std::uint64_t as_count(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    fail(path, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

std::uint64_t count_or(const json& obj, const std::string& key,
                       const std::string& path, std::uint64_t fallback) {
  return obj.contains(key) ? as_count(obj.at(key), join(path, key)) : fallback;
}

std::vector<double> as_numbers(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(as_number(v[i], index(path, i)));
  return out;
}

/// A scalar broadcast to n entries, or an array of exactly n numbers.
std::vector<double> scalar_or_list(const json& v, std::size_t n,
                                   const std::string& path) {
  if (v.is_number()) return std::vector<double>(n, as_number(v, path));
  std::vector<double> out = as_numbers(v, path);
  if (out.size() != n)
    fail(path, "expected " + std::to_string(n) + " entries, got " +
                   std::to_string(out.size()));
  return out;
}

const json& object_block(const json& doc, const std::string& key) {
  const json& block = require(doc, key, "");
  if (!block.is_object()) fail(key, "expected an object");
  return block;
}

std::string type_of(const json& block, const std::string& path) {
  const json& t = require(block, "type", path);
  if (!t.is_string()) fail(join(path, "type"), "expected a string");
  return t.get<std::string>();
}

std::shared_ptr<const GameModel> parse_wanet(const json& g, std::uint64_t seed) {
  const std::string path = "game";
  const std::uint64_t game_seed = count_or(g, "seed", path, seed);

  std::vector<std::vector<std::size_t>> routes;
  std::size_t users = count_or(g, "users", path, 15);
  std::size_t links = count_or(g, "links", path, 16);
  std::vector<double> capacities;
  if (g.contains("capacities") && g.at("capacities").is_array()) {
    capacities = as_numbers(g.at("capacities"), join(path, "capacities"));
    links = capacities.size();
  }
  if (g.contains("routes")) {
    const json& r = g.at("routes");
    const std::string rpath = join(path, "routes");
    if (!r.is_array()) fail(rpath, "expected an array of link-index arrays");
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (!r[i].is_array()) fail(index(rpath, i), "expected an array of link indices");
      std::vector<std::size_t> route;
      for (std::size_t k = 0; k < r[i].size(); ++k)
        route.push_back(as_count(r[i][k], index(index(rpath, i), k)));
      routes.push_back(std::move(route));
    }
    users = routes.size();
  } else {
    try {
      routes = random_routes(users, links, game_seed);
    } catch (const GameError& e) {
      fail(path, e.what());
    }
  }
  if (capacities.empty())
    capacities.assign(links, positive_or(g, "capacities", path, 10.0));

  std::vector<double> chi =
      g.contains("chi") ? scalar_or_list(g.at("chi"), users, join(path, "chi"))
                        : std::vector<double>(users, 10.0);
  try {
    return std::make_shared<WanetGame>(
        std::move(capacities), std::move(routes),
        positive_or(g, "kappa", path, 1.0), std::move(chi),
        positive_or(g, "max_flow", path, 10.0),
        positive_or(g, "eps_guard", path, 1e-6));
  } catch (const GameError& e) {
    fail(path, e.what());
  }
}

std::shared_ptr<const GameModel> parse_quadratic(const json& g) {
  const std::string path = "game";
  const std::vector<double> a = as_numbers(require(g, "a", path), join(path, "a"));
  const std::size_t n = a.size();
  if (n == 0) fail(join(path, "a"), "needs at least one player");
  const std::vector<double> d =
      scalar_or_list(require(g, "d", path), n, join(path, "d"));

  Eigen::MatrixXd coupling = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                                   static_cast<Eigen::Index>(n));
  if (g.contains("B")) {
    const json& b = g.at("B");
    const std::string bpath = join(path, "B");
    if (!b.is_array() || b.size() != n)
      fail(bpath, "expected " + std::to_string(n) + " rows");
    for (std::size_t i = 0; i < n; ++i) {
      const std::vector<double> row = scalar_or_list(b[i], n, index(bpath, i));
      for (std::size_t j = 0; j < n; ++j)
        coupling(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row[j];
    }
  }

  const json& box = require(g, "box", path);
  const std::string box_path = join(path, "box");
  if (!box.is_object()) fail(box_path, "expected an object with lower and upper");
  std::vector<double> lower = scalar_or_list(require(box, "lower", box_path), n,
                                             join(box_path, "lower"));
  std::vector<double> upper = scalar_or_list(require(box, "upper", box_path), n,
                                             join(box_path, "upper"));
  try {
    return std::make_shared<QuadraticGame>(
        Eigen::Map<const Eigen::VectorXd>(a.data(), static_cast<Eigen::Index>(n)),
        std::move(coupling),
        Eigen::Map<const Eigen::VectorXd>(d.data(), static_cast<Eigen::Index>(n)),
        ActionBox(std::move(lower), std::move(upper)));
  } catch (const GameError& e) {
    fail(path, e.what());
  }
}

std::shared_ptr<const GameModel> parse_game(const json& doc, std::uint64_t seed) {
  const json& g = object_block(doc, "game");
  const std::string type = type_of(g, "game");
  if (type == "wanet") return parse_wanet(g, seed);
  if (type == "quadratic") return parse_quadratic(g);
  if (type == "random_quadratic") {
    const std::size_t n = count_or(g, "n", "game", 5);
    if (n < 1) fail("game.n", "must be at least 1");
    return std::make_shared<QuadraticGame>(
        random_quadratic_game(n, count_or(g, "seed", "game", seed)));
  }
  fail("game.type", "unknown game type '" + type +
                        "' (expected wanet, quadratic or random_quadratic)");
}

CommGraph parse_graph(const json& doc, std::size_t players, std::uint64_t seed) {
  if (!doc.contains("graph")) {
    if (players < 2) fail("graph", "missing required block");
    const std::size_t max_chords = players >= 3 ? players * (players - 3) / 2 : 0;
    return random_connected_graph(players, std::min<std::size_t>(5, max_chords), seed);
  }
  const json& g = object_block(doc, "graph");
  const std::string type = type_of(g, "graph");
  const std::size_t n = count_or(g, "n", "graph", players);
  if (n != players)
    fail("graph.n", "graph has " + std::to_string(n) + " nodes but the game has " +
                        std::to_string(players) + " players");
  try {
    if (type == "ring") return CommGraph::ring(n);
    if (type == "complete") return CommGraph::complete(n);
    if (type == "path") return CommGraph::path(n);
    if (type == "random")
      return random_connected_graph(n, count_or(g, "extra_edges", "graph", 0),
                                    count_or(g, "seed", "graph", seed));
    if (type == "explicit") {
      const json& e = require(g, "edges", "graph");
      if (!e.is_array()) fail("graph.edges", "expected an array of [i, j] pairs");
      std::vector<Edge> edges;
      for (std::size_t k = 0; k < e.size(); ++k) {
        const std::string epath = index("graph.edges", k);
        if (!e[k].is_array() || e[k].size() != 2) fail(epath, "expected [i, j]");
        edges.emplace_back(as_count(e[k][0], index(epath, 0)),
                           as_count(e[k][1], index(epath, 1)));
      }
      return CommGraph(n, std::move(edges));
    }
  } catch (const GraphError& err) {
    fail("graph", err.what());
  }
  fail("graph.type", "unknown graph type '" + type +
                         "' (expected ring, complete, path, random or explicit)");
}

StopRule parse_stop(const json& block, const std::string& path, StopRule rule) {
  rule.max_iter = count_or(block, "max_iter", path, rule.max_iter);
  rule.tol_consensus = positive_or(block, "tol_consensus", path, rule.tol_consensus);
  rule.tol_residual = positive_or(block, "tol_residual", path, rule.tol_residual);
  rule.record_every = count_or(block, "record_every", path, rule.record_every);
  if (rule.record_every == 0) fail(join(path, "record_every"), "must be at least 1");
  return rule;
}

Matrix parse_x0(const json& admm, const GameModel& game) {
  const std::size_t n = game.num_players();
  const auto rows = static_cast<Eigen::Index>(n);
  Matrix x0 = Matrix::Zero(rows, rows);
  if (admm.contains("x0")) {
    const json& v = admm.at("x0");
    if (v.is_string()) {
      if (v.get<std::string>() != "zeros")
        fail("admm.x0", "expected \"zeros\", a profile or one profile per player");
    } else if (v.is_array() && !v.empty() && v[0].is_array()) {
      if (v.size() != n) fail("admm.x0", "expected " + std::to_string(n) + " rows");
      for (std::size_t i = 0; i < n; ++i) {
        const std::vector<double> row = scalar_or_list(v[i], n, index("admm.x0", i));
        for (std::size_t j = 0; j < n; ++j)
          x0(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row[j];
      }
    } else {
      const std::vector<double> profile = scalar_or_list(v, n, "admm.x0");
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          x0(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = profile[j];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!game.box().contains(row_span(x0, i)))
      fail("admm.x0", "initial estimate of player " + std::to_string(i) +
                          " lies outside the action box");
  return x0;
}

}  // namespace

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) fail("<root>", "expected a JSON object");
  RunConfig cfg;
  cfg.seed = as_count(require(doc, "seed", ""), "seed");
  cfg.game = parse_game(doc, cfg.seed);
  const std::size_t n = cfg.game->num_players();
  cfg.graph = parse_graph(doc, n, cfg.seed);

  const json empty = json::object();
  const json& admm = doc.contains("admm") ? object_block(doc, "admm") : empty;
  cfg.admm.penalty = positive_or(admm, "c", "admm", 1.0);
  if (admm.contains("beta")) {
    cfg.admm.beta = scalar_or_list(admm.at("beta"), n, "admm.beta");
    for (std::size_t i = 0; i < n; ++i)
      if (!(cfg.admm.beta[i] > 0.0)) fail(index("admm.beta", i), "must be positive");
  }
  cfg.admm.stop = parse_stop(admm, "admm", StopRule{});
  if (admm.contains("sigma_f")) cfg.sigma_f = positive_or(admm, "sigma_f", "admm", 1.0);
  cfg.x0 = parse_x0(admm, *cfg.game);

  if (doc.contains("baseline")) {
    const json& b = object_block(doc, "baseline");
    if (b.contains("self")) {
      if (!b.at("self").is_boolean()) fail("baseline.self", "expected true or false");
      cfg.self_compare = b.at("self").get<bool>();
    }
    BaselineConfig base;
    base.stop = parse_stop(b, "baseline", StopRule{20000, 1e-8, 1e-6, 1});
    if (b.contains("sweep")) {
      base.sweep = as_numbers(b.at("sweep"), "baseline.sweep");
      for (std::size_t i = 0; i < base.sweep.size(); ++i)
        if (!(base.sweep[i] > 0.0)) fail(index("baseline.sweep", i), "must be positive");
    } else if (b.contains("gamma")) {
      base.sweep.clear();
    }
    base.gamma = positive_or(b, "gamma", "baseline", base.gamma);
    cfg.baseline = base;
  }

  if (doc.contains("compare"))
    cfg.compare_tol = positive_or(object_block(doc, "compare"), "tol", "compare", 1e-4);
  if (doc.contains("check")) {
    cfg.sigma_samples = count_or(object_block(doc, "check"), "samples", "check", 2000);
    if (cfg.sigma_samples < 2) fail("check.samples", "must be at least 2");
  }
  if (doc.contains("output")) {
    if (!doc.at("output").is_string() || doc.at("output").get<std::string>().empty())
      fail("output", "expected a non-empty path");
    cfg.output = doc.at("output").get<std::string>();
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": invalid JSON: " + e.what());
  }
  return parse_config(doc);
}

json default_config() {
  return json{
      {"seed", 7},
      {"game",
       {{"type", "wanet"},
        {"users", 15},
        {"links", 16},
        {"kappa", 1.0},
        {"chi", 10.0},
        {"capacities", 10.0},
        {"max_flow", 10.0},
        {"eps_guard", 1e-6}}},
      {"graph", {{"type", "random"}, {"n", 15}, {"extra_edges", 5}, {"seed", 7}}},
      {"admm",
       {{"c", 1.0},
        {"beta", 10.0},
        {"max_iter", 5000},
        {"tol_consensus", 1e-8},
        {"tol_residual", 1e-7},
        {"record_every", 10},
        {"x0", "zeros"}}},
      {"baseline",
       {{"sweep", {0.2, 0.1, 0.05, 0.02, 0.01}},
        {"max_iter", 20000},
        {"tol_consensus", 1e-8},
        {"tol_residual", 1e-7},
        {"record_every", 10}}},
      {"compare", {{"tol", 1e-4}}},
      {"check", {{"samples", 2000}}},
      {"output", "trace.csv"}};
}

}  // namespace nashadmm
