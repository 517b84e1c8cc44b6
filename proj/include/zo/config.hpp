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

#ifndef ZO_CONFIG_HPP_
#define ZO_CONFIG_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace zo {

// Invalid configuration; `key` names the offending entry.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& msg)
      : std::runtime_error("config error: key '" + key + "': " + msg), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

// Flat `key = value` text: one pair per line, '#' starts a comment, blank
// lines ignored. Later assignments win, so flag overrides are a second pass.
std::map<std::string, std::string> parse_config_text(const std::string& text);
std::map<std::string, std::string> load_config_file(const std::string& path);

// Fully validated settings for one CLI command.
struct ExperimentConfig {
  std::string command;  // bench | check | optimize-external

  std::string geometry = "l2ball";  // l2ball | simplex
  double radius = 1.0;
  std::string objective = "abs_regression";
  std::vector<int> dims = {4};
  std::vector<std::int64_t> horizons = {1000};
  int replications = 1;
  std::uint64_t seed = 0;
  bool seed_was_generated = false;
  std::optional<double> eta;
  std::optional<double> delta;
  double noise_std = 0.0;
  std::int64_t fvalue_samples = 100000;
  std::string output;          // empty: stdout
  std::string format = "csv";  // csv | json

  std::vector<std::string> suites;  // check
  std::int64_t samples = 0;         // check: 0 = per-suite defaults

  std::string child;  // optimize-external: command line, whitespace-split
  std::optional<std::int64_t> budget;
  double g2 = 1.0;

  // Merged key/value view (file then flag overrides), echoed into outputs.
  std::map<std::string, std::string> echo;

  // Validates and converts; `from_file` enforces that files carry a seed.
  // A missing seed outside a file is generated and flagged.
  static ExperimentConfig from_key_values(const std::map<std::string, std::string>& kv,
                                          const std::string& command, bool from_file);
};

}  // namespace zo

#endif  // ZO_CONFIG_HPP_
