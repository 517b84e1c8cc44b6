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

#ifndef ZO_TESTS_TEST_UTIL_HPP_
#define ZO_TESTS_TEST_UTIL_HPP_

#include <array>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>

namespace zo::test {

// Composite Simpson quadrature; n must be even. Independent oracle for
// sphere averages in 2-D (parameterized by angle).
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
  if (n % 2 != 0) throw std::invalid_argument("simpson: n must be even");
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return sum * h / 3.0;
}

struct CommandResult {
  int exit_code;
  std::string output;  // stdout only
};

// Runs a shell command, capturing stdout and the exit code.
inline CommandResult run_command(const std::string& command) {
  std::array<char, 4096> chunk{};
  std::string output;
  FILE* pipe = ::popen(command.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed: " + command);
  while (std::fgets(chunk.data(), chunk.size(), pipe) != nullptr) output += chunk.data();
  const int status = ::pclose(pipe);
  const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return CommandResult{exit_code, output};
}

}  // namespace zo::test

#endif  // ZO_TESTS_TEST_UTIL_HPP_
