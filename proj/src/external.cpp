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

#include "zo/external.hpp"

#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cmath>
#include <cstring>
#include <sstream>

#include "zo/io.hpp"

namespace zo {

namespace {

void ignore_sigpipe_once() {
  static const bool done = [] {
    ::signal(SIGPIPE, SIG_IGN);
    return true;
  }();
  (void)done;
}

}  // namespace

std::vector<std::string> ExternalProcess::split_command(const std::string& command_line) {
  std::vector<std::string> argv;
  std::stringstream ss(command_line);
  std::string token;
  while (ss >> token) argv.push_back(token);
  return argv;
}

ExternalProcess::ExternalProcess(const std::vector<std::string>& argv) {
  if (argv.empty()) throw ProtocolError("empty child command", "");
  ignore_sigpipe_once();

  int to_child[2];
  int from_child[2];
  if (::pipe(to_child) != 0) throw ProtocolError("pipe() failed", "");
  if (::pipe(from_child) != 0) {
    ::close(to_child[0]);
    ::close(to_child[1]);
    throw ProtocolError("pipe() failed", "");
  }

  const pid_t pid = ::fork();
  if (pid < 0) {
    ::close(to_child[0]);
    ::close(to_child[1]);
    ::close(from_child[0]);
    ::close(from_child[1]);
    throw ProtocolError("fork() failed", "");
  }
  if (pid == 0) {
    ::dup2(to_child[0], STDIN_FILENO);
    ::dup2(from_child[1], STDOUT_FILENO);
    ::close(to_child[0]);
    ::close(to_child[1]);
    ::close(from_child[0]);
    ::close(from_child[1]);
    std::vector<char*> args;
    args.reserve(argv.size() + 1);
    for (const std::string& a : argv) args.push_back(const_cast<char*>(a.c_str()));
    args.push_back(nullptr);
    ::execvp(args[0], args.data());
    // Only reached when exec fails.
    const char* msg = "child exec failed\n";
    const ssize_t ignored = ::write(STDERR_FILENO, msg, std::strlen(msg));
    (void)ignored;
    ::_exit(127);
  }

  child_pid_ = pid;
  to_child_ = to_child[1];
  from_child_ = from_child[0];
  ::close(to_child[0]);
  ::close(from_child[1]);
}

ExternalProcess::~ExternalProcess() {
  if (child_pid_ < 0) return;
  close_pipes();
  int status = 0;
  if (::waitpid(child_pid_, &status, WNOHANG) == 0) {
    ::kill(child_pid_, SIGKILL);
    ::waitpid(child_pid_, &status, 0);
  }
}

void ExternalProcess::close_pipes() {
  if (to_child_ >= 0) {
    ::close(to_child_);
    to_child_ = -1;
  }
  if (from_child_ >= 0) {
    ::close(from_child_);
    from_child_ = -1;
  }
}

void ExternalProcess::write_all(const std::string& data) {
  std::size_t written = 0;
  while (written < data.size()) {
    const ssize_t n = ::write(to_child_, data.data() + written, data.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw ProtocolError("write to child failed: " + std::string(std::strerror(errno)), data);
    }
    written += static_cast<std::size_t>(n);
  }
}

std::string ExternalProcess::read_line() {
  for (;;) {
    const auto nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      std::string line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return line;
    }
    char chunk[4096];
    const ssize_t n = ::read(from_child_, chunk, sizeof(chunk));
    if (n < 0) {
      if (errno == EINTR) continue;
      throw ProtocolError("read from child failed: " + std::string(std::strerror(errno)), "");
    }
    if (n == 0) throw ProtocolError("child closed its output stream", buffer_);
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
}

double ExternalProcess::eval(const Vec& w) {
  if (child_pid_ < 0 || shut_down_) throw ProtocolError("child is not running", "");
  std::string request = "EVAL " + format_vector(w) + "\n";
  write_all(request);
  ++requests_;
  std::string response;
  try {
    response = read_line();
  } catch (const ProtocolError& e) {
    throw ProtocolError(e.what(), "request: " + request + "response: <none>");
  }
  const std::string exchange = "request: " + request + "response: " + response + "\n";
  log_trace(exchange);

  if (response.rfind("VAL ", 0) != 0) {
    throw ProtocolError("malformed response (expected 'VAL <decimal>')", exchange);
  }
  const std::string payload = response.substr(4);
  char* end = nullptr;
  errno = 0;
  const double value = std::strtod(payload.c_str(), &end);
  if (end == payload.c_str() || *end != '\0' || errno == ERANGE) {
    throw ProtocolError("malformed value in response", exchange);
  }
  if (!std::isfinite(value)) {
    throw ProtocolError("non-finite value in response", exchange);
  }
  return value;
}

void ExternalProcess::shutdown() {
  if (child_pid_ < 0 || shut_down_) return;
  shut_down_ = true;
  write_all("END\n");
  close_pipes();
  int status = 0;
  if (::waitpid(child_pid_, &status, 0) < 0) {
    throw ProtocolError("waitpid failed", "");
  }
  const pid_t pid = child_pid_;
  child_pid_ = -1;
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    throw ProtocolError("child (pid " + std::to_string(pid) + ") did not exit cleanly after END",
                        "");
  }
}

}  // namespace zo
