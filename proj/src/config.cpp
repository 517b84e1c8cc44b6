// Copyright 2026 The zeroorder Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zo/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace zo {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key, "expected a number, got '" + value + "'");
  }
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(key, "expected an integer, got '" + value + "'");
  }
  return v;
}

std::uint64_t parse_uint(const std::string& key, const std::string& value) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ConfigError(key, "expected a nonnegative integer, got '" + value + "'");
  }
  return v;
}

const std::set<std::string>& known_keys(const std::string& command) {
  static const std::set<std::string> bench = {
      "geometry", "radius",  "objective", "d",          "T",
      "replications", "seed", "eta",      "delta",      "noise_std",
      "fvalue_samples", "output", "format"};
  static const std::set<std::string> check = {"suite", "seed", "samples", "output", "format"};
  static const std::set<std::string> external = {
      "child", "geometry", "radius", "d",      "T",     "budget",
      "g2",    "seed",     "eta",    "delta",  "output", "format"};
  if (command == "bench") return bench;
  if (command == "check") return check;
  return external;
}

}  // namespace

std::map<std::string, std::string> parse_config_text(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno), "expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(lineno), "empty key");
    }
    kv[key] = value;
  }
  return kv;
}

std::map<std::string, std::string> load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

ExperimentConfig ExperimentConfig::from_key_values(const std::map<std::string, std::string>& kv,
                                                   const std::string& command, bool from_file) {
  if (command != "bench" && command != "check" && command != "optimize-external") {
    throw ConfigError("command", "unknown command '" + command + "'");
  }
  const auto& keys = known_keys(command);
  for (const auto& [key, value] : kv) {
    if (keys.find(key) == keys.end()) {
      throw ConfigError(key, "unknown key for command '" + command + "'");
    }
  }

  ExperimentConfig cfg;
  cfg.command = command;
  cfg.echo = kv;

  const auto get = [&](const std::string& key) -> std::optional<std::string> {
    const auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    return it->second;
  };

  if (auto v = get("geometry")) {
    if (*v != "l2ball" && *v != "simplex") {
      throw ConfigError("geometry", "expected 'l2ball' or 'simplex', got '" + *v + "'");
    }
    cfg.geometry = *v;
  }
  if (auto v = get("radius")) {
    cfg.radius = parse_double("radius", *v);
    if (!(cfg.radius > 0.0)) throw ConfigError("radius", "must be > 0");
  }
  if (auto v = get("objective")) cfg.objective = *v;
  if (auto v = get("d")) {
    cfg.dims.clear();
    for (const std::string& item : split(*v, ',')) {
      const std::int64_t d = parse_int("d", item);
      if (d < 1) throw ConfigError("d", "dimensions must be >= 1");
      if (cfg.geometry == "simplex" && d < 2) throw ConfigError("d", "simplex requires d > 1");
      cfg.dims.push_back(static_cast<int>(d));
    }
    if (cfg.dims.empty()) throw ConfigError("d", "empty list");
  }
  if (auto v = get("T")) {
    cfg.horizons.clear();
    for (const std::string& item : split(*v, ',')) {
      const std::int64_t t = parse_int("T", item);
      if (t < 1) throw ConfigError("T", "horizons must be >= 1");
      cfg.horizons.push_back(t);
    }
    if (cfg.horizons.empty()) throw ConfigError("T", "empty list");
  }
  if (auto v = get("replications")) {
    const std::int64_t r = parse_int("replications", *v);
    if (r < 1) throw ConfigError("replications", "must be >= 1");
    cfg.replications = static_cast<int>(r);
  }
  if (auto v = get("eta")) {
    cfg.eta = parse_double("eta", *v);
    if (!(*cfg.eta > 0.0)) throw ConfigError("eta", "must be > 0");
  }
  if (auto v = get("delta")) {
    cfg.delta = parse_double("delta", *v);
    if (!(*cfg.delta > 0.0)) throw ConfigError("delta", "must be > 0");
  }
  if (auto v = get("noise_std")) {
    cfg.noise_std = parse_double("noise_std", *v);
    if (cfg.noise_std < 0.0) throw ConfigError("noise_std", "must be >= 0");
  }
  if (auto v = get("fvalue_samples")) {
    cfg.fvalue_samples = parse_int("fvalue_samples", *v);
    if (cfg.fvalue_samples < 2) throw ConfigError("fvalue_samples", "must be >= 2");
  }
  if (auto v = get("output")) cfg.output = *v;
  if (auto v = get("format")) {
    if (*v != "csv" && *v != "json") {
      throw ConfigError("format", "expected 'csv' or 'json', got '" + *v + "'");
    }
    cfg.format = *v;
  }
  if (auto v = get("suite")) {
    cfg.suites = split(*v, ',');
    cfg.suites.erase(std::remove(cfg.suites.begin(), cfg.suites.end(), std::string()),
                     cfg.suites.end());
    if (cfg.suites.empty()) throw ConfigError("suite", "empty list");
  }
  if (auto v = get("samples")) {
    cfg.samples = parse_int("samples", *v);
    if (cfg.samples < 1000) throw ConfigError("samples", "must be >= 1000");
  }
  if (auto v = get("child")) {
    cfg.child = *v;
    if (cfg.child.empty()) throw ConfigError("child", "empty command line");
  }
  if (auto v = get("budget")) {
    cfg.budget = parse_int("budget", *v);
    if (*cfg.budget < 2) throw ConfigError("budget", "must be >= 2 (two queries per round)");
  }
  if (auto v = get("g2")) {
    cfg.g2 = parse_double("g2", *v);
    if (!(cfg.g2 > 0.0)) throw ConfigError("g2", "must be > 0");
  }

  if (auto v = get("seed")) {
    cfg.seed = parse_uint("seed", *v);
  } else if (from_file) {
    // Result files must be reproducible from their config alone.
    throw ConfigError("seed", "mandatory in config files");
  } else {
    std::random_device rd;
    cfg.seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    cfg.seed_was_generated = true;
    cfg.echo["seed"] = std::to_string(cfg.seed);
  }

  if (command == "optimize-external" && cfg.child.empty()) {
    throw ConfigError("child", "required for optimize-external");
  }
  return cfg;
}

}  // namespace zo
