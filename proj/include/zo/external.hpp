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

#ifndef ZO_EXTERNAL_HPP_
#define ZO_EXTERNAL_HPP_

#include <string>
#include <vector>

#include "zo/common.hpp"

namespace zo {

// Protocol violation (malformed line, non-finite value, child death);
// carries the offending request/response exchange for logging.
class ProtocolError : public std::runtime_error {
 public:
  ProtocolError(const std::string& msg, std::string exchange)
      : std::runtime_error(msg), exchange_(std::move(exchange)) {}
  const std::string& exchange() const { return exchange_; }

 private:
  std::string exchange_;
};

// A black-box objective spoken to over a line protocol on the child's
// stdin/stdout, one exchange per query:
//   request:  "EVAL <d space-separated decimal coordinates>\n"
//   response: "VAL <decimal>\n"
//   shutdown: "END\n"; the child must exit 0.
// The child must flush after each response. Single-threaded, sequential.
class ExternalProcess {
 public:
  explicit ExternalProcess(const std::vector<std::string>& argv);
  ~ExternalProcess();

  ExternalProcess(const ExternalProcess&) = delete;
  ExternalProcess& operator=(const ExternalProcess&) = delete;

  double eval(const Vec& w);

  // Sends END and waits for the child; throws ProtocolError on a nonzero
  // exit status. Idempotent.
  void shutdown();

  std::int64_t request_count() const { return requests_; }

  // Splits a command line on whitespace (no quoting).
  static std::vector<std::string> split_command(const std::string& command_line);

 private:
  std::string read_line();
  void write_all(const std::string& data);
  void close_pipes();

  int child_pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
  std::int64_t requests_ = 0;
  bool shut_down_ = false;
};

}  // namespace zo

#endif  // ZO_EXTERNAL_HPP_
