#pragma once

// External evaluators over line-delimited JSON.
//
// The harness starts `/bin/sh -c <command>` once and keeps it alive. Each
// evaluation writes one request line to the child's stdin
//
//   {"id": "<n>", "params": {...design...}, "operating_point": {...}}
//
// and reads one reply line from its stdout,
//
//   {"id": "<n>", "metrics": {"CL": ..., ...}}   or   {"id": "<n>", "error": "..."}
//
// Exactly one request is in flight. A reply with the wrong id, malformed
// JSON, non-numeric metrics, EOF, a non-zero exit or no reply within the
// timeout is an EvaluationError. After a crash or timeout the child is
// reaped and a new one is started on the next request.

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstring>
#include <memory>
#include <string>

#include "shapebench/problems/evaluator.hpp"

namespace shapebench {

class SubprocessEvaluator : public Evaluator {
 public:
  explicit SubprocessEvaluator(std::string command, double timeout_s = 300.0)
      : command_(std::move(command)), timeout_s_(timeout_s) {
    if (command_.empty()) throw ConfigError("subprocess evaluator needs a command");
    if (!(timeout_s_ > 0.0)) throw ConfigError("subprocess timeout must be positive");
  }

  SubprocessEvaluator(const SubprocessEvaluator&) = delete;
  SubprocessEvaluator& operator=(const SubprocessEvaluator&) = delete;

  ~SubprocessEvaluator() override { stop(); }

  std::unique_ptr<Evaluator> clone() const override {
    return std::make_unique<SubprocessEvaluator>(command_, timeout_s_);
  }

  Json describe() const override {
    Json j;
    j["type"] = "subprocess";
    j["command"] = command_;
    j["timeout_s"] = timeout_s_;
    return j;
  }

  Metrics evaluate(const ParamSpace& space, const DesignPoint& point, const OperatingPoint& op) override {
    Json params = space.design_to_json(point);
    params.erase("name");
    return request(params, op.to_json());
  }

  /// Sends one raw request and returns the parsed metrics.
  Metrics request(const Json& params, const Json& operating_point) {
    ensure_running();
    const std::string id = std::to_string(++next_id_);
    Json req;
    req["id"] = id;
    req["params"] = params;
    req["operating_point"] = operating_point;
    write_line(req.dump());
    const std::string line = read_line();
    Json reply;
    try {
      reply = Json::parse(line);
    } catch (const Json::parse_error&) {
      fail("malformed reply: " + truncate(line));
    }
    if (!reply.is_object() || !reply.contains("id") || reply.at("id") != id) {
      fail("reply id mismatch (expected " + id + "): " + truncate(line));
    }
    if (reply.contains("error")) {
      const auto& e = reply.at("error");
      throw EvaluationError("evaluator reported: " + (e.is_string() ? e.get<std::string>() : e.dump()));
    }
    if (!reply.contains("metrics") || !reply.at("metrics").is_object()) fail("reply without metrics object");
    Metrics m;
    for (const auto& [k, v] : reply.at("metrics").items()) {
      if (!v.is_number()) fail("metric '" + k + "' is not a number");
      const double x = v.get<double>();
      if (!std::isfinite(x)) fail("metric '" + k + "' is not finite");
      m[k] = x;
    }
    return m;
  }

  const std::string& command() const { return command_; }
  bool running() const { return pid_ > 0; }

 private:
  [[noreturn]] void fail(const std::string& what) {
    stop();
    throw EvaluationError("subprocess evaluator '" + command_ + "': " + what);
  }

  static std::string truncate(const std::string& s) { return s.size() > 200 ? s.substr(0, 200) + "..." : s; }

  void ensure_running() {
    if (pid_ > 0) return;
    ignore_sigpipe();
    int to_child[2];
    int from_child[2];
    if (pipe(to_child) != 0) throw EvaluationError("pipe() failed");
    if (pipe(from_child) != 0) {
      close(to_child[0]);
      close(to_child[1]);
      throw EvaluationError("pipe() failed");
    }
    const pid_t pid = fork();
    if (pid < 0) {
      for (int fd : {to_child[0], to_child[1], from_child[0], from_child[1]}) close(fd);
      throw EvaluationError("fork() failed");
    }
    if (pid == 0) {
      dup2(to_child[0], STDIN_FILENO);
      dup2(from_child[1], STDOUT_FILENO);
      for (int fd : {to_child[0], to_child[1], from_child[0], from_child[1]}) close(fd);
      execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
      _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);
    fcntl(to_child[1], F_SETFD, FD_CLOEXEC);
    fcntl(from_child[0], F_SETFD, FD_CLOEXEC);
    pid_ = pid;
    in_fd_ = to_child[1];
    out_fd_ = from_child[0];
    buffer_.clear();
  }

  static void ignore_sigpipe() {
    static const bool done = [] {
      struct sigaction sa {};
      sa.sa_handler = SIG_IGN;
      sigemptyset(&sa.sa_mask);
      sigaction(SIGPIPE, &sa, nullptr);
      return true;
    }();
    (void)done;
  }

  void write_line(const std::string& text) {
    std::string data = text + "\n";
    std::size_t off = 0;
    while (off < data.size()) {
      const ssize_t n = ::write(in_fd_, data.data() + off, data.size() - off);
      if (n < 0) {
        if (errno == EINTR) continue;
        fail(exit_description("write failed"));
      }
      off += static_cast<std::size_t>(n);
    }
  }

  std::string read_line() {
    using clock = std::chrono::steady_clock;
    const auto deadline = clock::now() + std::chrono::duration<double>(timeout_s_);
    for (;;) {
      const auto nl = buffer_.find('\n');
      if (nl != std::string::npos) {
        std::string line = buffer_.substr(0, nl);
        buffer_.erase(0, nl + 1);
        return line;
      }
      const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - clock::now()).count();
      if (left <= 0) fail("timed out after " + std::to_string(timeout_s_) + " s");
      pollfd pfd{out_fd_, POLLIN, 0};
      const int r = poll(&pfd, 1, static_cast<int>(std::min<long long>(left, 1000 * 60)));
      if (r < 0) {
        if (errno == EINTR) continue;
        fail("poll failed");
      }
      if (r == 0) continue;
      char chunk[4096];
      const ssize_t n = ::read(out_fd_, chunk, sizeof(chunk));
      if (n < 0) {
        if (errno == EINTR) continue;
        fail("read failed");
      }
      if (n == 0) fail(exit_description("evaluator closed its output"));
      buffer_.append(chunk, static_cast<std::size_t>(n));
    }
  }

  std::string exit_description(const std::string& what) {
    if (pid_ <= 0) return what;
    int status = 0;
    // give a dying child a moment to be reapable so the exit code is reported
    for (int i = 0; i < 50; ++i) {
      const pid_t r = waitpid(pid_, &status, WNOHANG);
      if (r == pid_) {
        pid_ = -1;
        if (WIFEXITED(status)) return what + " (exit code " + std::to_string(WEXITSTATUS(status)) + ")";
        if (WIFSIGNALED(status)) return what + " (killed by signal " + std::to_string(WTERMSIG(status)) + ")";
        return what;
      }
      usleep(2000);
    }
    return what;
  }

  void stop() {
    if (in_fd_ >= 0) close(in_fd_);
    if (out_fd_ >= 0) close(out_fd_);
    in_fd_ = out_fd_ = -1;
    if (pid_ > 0) {
      int status = 0;
      if (waitpid(pid_, &status, WNOHANG) == 0) {
        kill(pid_, SIGKILL);
        waitpid(pid_, &status, 0);
      }
      pid_ = -1;
    }
    buffer_.clear();
  }

  std::string command_;
  double timeout_s_;
  pid_t pid_ = -1;
  int in_fd_ = -1;
  int out_fd_ = -1;
  std::string buffer_;
  std::uint64_t next_id_ = 0;
};

}  // namespace shapebench
