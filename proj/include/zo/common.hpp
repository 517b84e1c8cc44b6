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

#ifndef ZO_COMMON_HPP_
#define ZO_COMMON_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace zo {

inline constexpr const char* kVersion = "0.1.0";

using Vec = Eigen::VectorXd;

// Thrown when a black-box objective returns a non-finite value. Carries the
// query point so callers can log the offending evaluation.
class OracleFailure : public std::runtime_error {
 public:
  OracleFailure(const std::string& msg, Vec point)
      : std::runtime_error(msg), point_(std::move(point)) {}
  const Vec& point() const { return point_; }

 private:
  Vec point_;
};

// Stderr logging, controlled by the ZO_LOG environment variable
// (off | info | trace; default info).
enum class LogLevel { kOff = 0, kInfo = 1, kTrace = 2 };

LogLevel log_level();
void log_info(const std::string& msg);
void log_trace(const std::string& msg);

// Runs fn(0..n-1) on a small thread pool. Tasks must write to disjoint
// state; the first exception is rethrown after all workers join.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

}  // namespace zo

#endif  // ZO_COMMON_HPP_
