// Copyright 2026 The RankLab Authors.
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

#include "ranklab/subprocess.h"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cmath>
#include <mutex>

#include "ranklab/error.h"
#include "ranklab/io.h"

namespace ranklab {
namespace {

void IgnoreSigpipe() {
  static std::once_flag once;
  std::call_once(once, [] { ::signal(SIGPIPE, SIG_IGN); });
}

void ClosePair(int fds[2]) {
  if (fds[0] >= 0) ::close(fds[0]);
  if (fds[1] >= 0) ::close(fds[1]);
}

}  // namespace

SubprocessResult RunSubprocess(const std::string& command, std::string_view input, int timeout_ms) {
  IgnoreSigpipe();
  int in_pipe[2] = {-1, -1};
  int out_pipe[2] = {-1, -1};
  int err_pipe[2] = {-1, -1};
  if (::pipe2(in_pipe, O_CLOEXEC) != 0 || ::pipe2(out_pipe, O_CLOEXEC) != 0 || ::pipe2(err_pipe, O_CLOEXEC) != 0) {
    ClosePair(in_pipe);
    ClosePair(out_pipe);
    ClosePair(err_pipe);
    throw Error(ErrorCode::kIoError, "pipe creation failed");
  }
  const pid_t pid = ::fork();
  if (pid < 0) {
    ClosePair(in_pipe);
    ClosePair(out_pipe);
    ClosePair(err_pipe);
    throw Error(ErrorCode::kIoError, "fork failed");
  }
  if (pid == 0) {
    ::dup2(in_pipe[0], STDIN_FILENO);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    ::dup2(err_pipe[1], STDERR_FILENO);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  ::close(err_pipe[1]);

  int to_child = in_pipe[1];
  ::fcntl(to_child, F_SETFL, O_NONBLOCK);
  std::size_t written = 0;
  if (input.empty()) {
    ::close(to_child);
    to_child = -1;
  }

  SubprocessResult result;
  int from_out = out_pipe[0];
  int from_err = err_pipe[0];
  const auto deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
  bool timed_out = false;
  char buf[65536];
  while (from_out >= 0 || from_err >= 0) {
    pollfd fds[3];
    int count = 0;
    if (to_child >= 0) fds[count++] = {to_child, POLLOUT, 0};
    if (from_out >= 0) fds[count++] = {from_out, POLLIN, 0};
    if (from_err >= 0) fds[count++] = {from_err, POLLIN, 0};
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
    if (left.count() <= 0) {
      timed_out = true;
      break;
    }
    const int ready = ::poll(fds, count, static_cast<int>(left.count()));
    if (ready < 0) {
      if (errno == EINTR) continue;
      break;
    }
    for (int f = 0; f < count; ++f) {
      if (fds[f].revents == 0) continue;
      if (fds[f].fd == to_child) {
        const ssize_t w = ::write(to_child, input.data() + written, input.size() - written);
        if (w > 0) written += static_cast<std::size_t>(w);
        if (w < 0 && errno != EAGAIN && errno != EINTR) written = input.size();
        if (written == input.size()) {
          ::close(to_child);
          to_child = -1;
        }
        continue;
      }
      const ssize_t r = ::read(fds[f].fd, buf, sizeof(buf));
      if (r > 0) {
        (fds[f].fd == from_out ? result.out : result.err).append(buf, static_cast<std::size_t>(r));
      } else if (r == 0 || (errno != EAGAIN && errno != EINTR)) {
        ::close(fds[f].fd);
        (fds[f].fd == from_out ? from_out : from_err) = -1;
      }
    }
  }
  if (to_child >= 0) ::close(to_child);
  if (from_out >= 0) ::close(from_out);
  if (from_err >= 0) ::close(from_err);
  if (timed_out) ::kill(pid, SIGKILL);
  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (timed_out) {
    throw Error(ErrorCode::kProtocolError, "external command timed out after " + std::to_string(timeout_ms) + " ms");
  }
  result.status = WIFEXITED(status) ? WEXITSTATUS(status) : 128 + WTERMSIG(status);
  return result;
}

ProcedureHandle ExternalProcedure(const std::string& command, double tolerance, int timeout_ms) {
  ProcedureHandle handle;
  handle.name = "exec:" + command;
  handle.evaluate = [command, tolerance, timeout_ms](const Profile& profile) {
    const SubprocessResult run = RunSubprocess(command, ProfileToJson(profile) + "\n", timeout_ms);
    if (run.status != 0) {
      throw Error(ErrorCode::kProtocolError,
                  "external procedure exited with status " + std::to_string(run.status) + ": " + run.err);
    }
    std::vector<double> scores;
    try {
      scores = ScoresFromJson(run.out);
    } catch (const Error& e) {
      throw Error(ErrorCode::kProtocolError, std::string("external procedure output: ") + e.what());
    }
    if (static_cast<int>(scores.size()) != profile.alternatives()) {
      throw Error(ErrorCode::kProtocolError, "external procedure returned " + std::to_string(scores.size()) +
                                                 " scores for " + std::to_string(profile.alternatives()) +
                                                 " alternatives");
    }
    for (double s : scores) {
      if (!std::isfinite(s)) throw Error(ErrorCode::kProtocolError, "external procedure returned a non-finite score");
    }
    return ScoreVector(std::move(scores), tolerance);
  };
  return handle;
}

}  // namespace ranklab
