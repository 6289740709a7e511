#include "test_support.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "groundkit/bars.hpp"

namespace gktest {

bool closure_pool_small(const groundkit::Formula& f, bool star, std::size_t max_pool) {
    groundkit::FormulaSet pool;
    for (const groundkit::FormulaSet& bar : groundkit::grounding_bars(f, star))
        pool = pool.united_with(bar);
    return pool.size() <= max_pool;
}

namespace {

std::string binary_path() {
    if (const char* env = std::getenv("GROUNDKIT_BIN")) return env;
#ifdef GROUNDKIT_CLI_PATH
    return GROUNDKIT_CLI_PATH;
#else
    throw std::runtime_error("groundkit binary path not configured");
#endif
}

std::string drain(int fd) {
    std::string data;
    char buffer[4096];
    while (true) {
        const ssize_t n = ::read(fd, buffer, sizeof buffer);
        if (n > 0) {
            data.append(buffer, static_cast<std::size_t>(n));
            continue;
        }
        if (n == 0) break;
        if (errno == EINTR) continue;
        break;
    }
    return data;
}

}  // namespace

RunResult run_cli(const std::vector<std::string>& args, const std::string& stdin_data,
                  const std::vector<std::string>& extra_env) {
    const std::string binary = binary_path();

    int in_pipe[2], out_pipe[2], err_pipe[2];
    if (::pipe(in_pipe) != 0 || ::pipe(out_pipe) != 0 || ::pipe(err_pipe) != 0)
        throw std::runtime_error("pipe() failed");

    const pid_t pid = ::fork();
    if (pid < 0) throw std::runtime_error("fork() failed");

    if (pid == 0) {
        ::dup2(in_pipe[0], STDIN_FILENO);
        ::dup2(out_pipe[1], STDOUT_FILENO);
        ::dup2(err_pipe[1], STDERR_FILENO);
        for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1], err_pipe[0], err_pipe[1]})
            ::close(fd);
        for (const std::string& kv : extra_env) {
            const auto eq = kv.find('=');
            if (eq != std::string::npos)
                ::setenv(kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str(), 1);
        }
        std::vector<char*> argv;
        argv.push_back(const_cast<char*>(binary.c_str()));
        for (const std::string& a : args) argv.push_back(const_cast<char*>(a.c_str()));
        argv.push_back(nullptr);
        ::execv(binary.c_str(), argv.data());
        ::_exit(127);
    }

    ::close(in_pipe[0]);
    ::close(out_pipe[1]);
    ::close(err_pipe[1]);

    std::size_t written = 0;
    while (written < stdin_data.size()) {
        const ssize_t n =
            ::write(in_pipe[1], stdin_data.data() + written, stdin_data.size() - written);
        if (n < 0) {
            if (errno == EINTR) continue;
            break;
        }
        written += static_cast<std::size_t>(n);
    }
    ::close(in_pipe[1]);

    RunResult result;
    result.out = drain(out_pipe[0]);
    result.err = drain(err_pipe[0]);
    ::close(out_pipe[0]);
    ::close(err_pipe[0]);

    int status = 0;
    ::waitpid(pid, &status, 0);
    if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    else if (WIFSIGNALED(status)) result.exit_code = 128 + WTERMSIG(status);
    return result;
}

}  // namespace gktest
