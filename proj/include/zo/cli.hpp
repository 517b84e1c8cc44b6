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

#ifndef ZO_CLI_HPP_
#define ZO_CLI_HPP_

#include <functional>

#include "zo/config.hpp"
#include "zo/objectives.hpp"

namespace zo {

// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitRunAborted = 3;
inline constexpr int kExitProtocolError = 4;

// Builds the loss stream for one bench replication; injectable for tests.
using StreamFactory =
    std::function<LossStream(const ExperimentConfig&, int d, std::uint64_t stream_seed)>;

StreamFactory builtin_stream_factory();

int cmd_bench(const ExperimentConfig& config, const StreamFactory& factory = builtin_stream_factory());
int cmd_check(const ExperimentConfig& config);
int cmd_optimize_external(const ExperimentConfig& config);

// Full argv entry point: subcommand dispatch, config file + flag overrides.
int run_cli(int argc, char** argv);

}  // namespace zo

#endif  // ZO_CLI_HPP_
