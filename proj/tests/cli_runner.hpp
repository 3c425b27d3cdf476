// Helper for driving the installed CLI binary from tests.  Commands run via
// the shell with stdout/stderr captured to files under a per-process temp
// directory.
#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#if defined(__unix__) || defined(__APPLE__)
#include <sys/wait.h>
#include <unistd.h>
#endif

#ifndef BUTKIT_CLI_PATH
#error "BUTKIT_CLI_PATH must be defined by the build"
#endif

namespace clirun {

inline const std::filesystem::path& temp_dir() {
  static const std::filesystem::path dir = [] {
    std::filesystem::path d =
        std::filesystem::temp_directory_path() / ("butkit_test_" + std::to_string(static_cast<long>(::getpid())));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

inline std::string temp_path(const std::string& name) { return (temp_dir() / name).string(); }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

/// Runs `butkit <args>`; `tag` names the capture files so parallel cases do
/// not collide.
inline RunResult run_cli(const std::string& args, const std::string& tag) {
  const std::string out_path = temp_path(tag + ".out");
  const std::string err_path = temp_path(tag + ".err");
  const std::string command =
      std::string("\"") + BUTKIT_CLI_PATH + "\" " + args + " > \"" + out_path + "\" 2> \"" + err_path + "\"";
  const int raw = std::system(command.c_str());
  RunResult result;
#if defined(WIFEXITED)
  result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
#else
  result.exit_code = raw;
#endif
  result.out = read_text(out_path);
  result.err = read_text(err_path);
  return result;
}

}  // namespace clirun
