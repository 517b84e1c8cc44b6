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

#ifndef ZO_IO_HPP_
#define ZO_IO_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "zo/common.hpp"

namespace zo {

// Shortest decimal string that round-trips the double ('.' separator,
// locale-free). Identical inputs always format identically, so repeated
// runs produce byte-identical files.
std::string format_double(double v);
std::string format_vector(const Vec& v, char sep = ' ');

// One bench result row; `rep` is a replication index, "summary", or the
// index of an aborted replication with status "aborted".
struct BenchRow {
  std::string rep;
  std::uint64_t seed = 0;
  int d = 0;
  std::int64_t T = 0;
  double eta = 0.0;
  double delta = 0.0;
  std::optional<double> avg_regret;
  std::optional<double> opt_error;
  std::optional<double> opt_error_se;
  std::string status = "ok";
};

struct CellNote {
  int d;
  std::int64_t T;
  double avg_regret_se;
};

struct FitNote {
  std::optional<double> alpha_d, alpha_d_se;
  std::optional<double> alpha_T, alpha_T_se;
};

// Self-describing result files: config echo + seed + version header, data
// rows, per-cell standard errors and the scaling fit when grids are present.
void write_bench_csv(std::ostream& out, const std::map<std::string, std::string>& config_echo,
                     const std::vector<BenchRow>& rows, const std::vector<CellNote>& notes,
                     const std::optional<FitNote>& fit);
void write_bench_json(std::ostream& out, const std::map<std::string, std::string>& config_echo,
                      const std::vector<BenchRow>& rows, const std::vector<CellNote>& notes,
                      const std::optional<FitNote>& fit);

struct TrajectoryPoint {
  std::int64_t t;
  double f_plus;
  double f_minus;
};

// optimize-external output: the observed value trajectory plus the average
// iterate.
void write_external_csv(std::ostream& out, const std::map<std::string, std::string>& config_echo,
                        const std::vector<TrajectoryPoint>& trajectory, const Vec& average_iterate);
void write_external_json(std::ostream& out, const std::map<std::string, std::string>& config_echo,
                         const std::vector<TrajectoryPoint>& trajectory,
                         const Vec& average_iterate);

}  // namespace zo

#endif  // ZO_IO_HPP_
