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

#ifndef ZO_CHECKS_HPP_
#define ZO_CHECKS_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace zo {

struct CheckResult {
  std::string suite;
  bool passed;
  std::string detail;  // measured values, thresholds
};

// Named diagnostic suites for `zo check`:
//   anchored_d2      anchored estimator second moment = d^2 at a kink
//   symmetric_moment symmetric estimator second moment linear in d
//   unbiasedness     estimator mean matches the smoothed gradient
//   smoothing_gap    |f_smoothed - f| <= delta * G2
//   md_inequality    per-run dual-averaging inequality audit
//   inf_norm         infinity-norm fourth-moment bound
//   concentration    Lipschitz fourth-moment concentration on the sphere
// `samples` of 0 selects per-suite defaults.
std::vector<std::string> known_check_suites();
CheckResult run_check_suite(const std::string& suite, std::uint64_t seed, std::int64_t samples);

}  // namespace zo

#endif  // ZO_CHECKS_HPP_
