#pragma once

// Runs the command-line binary through the shell and captures both streams.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef SCHEMATA_CLI
#error "SCHEMATA_CLI must name the command-line binary"
#endif

namespace cli_test {

struct Run {
  std::string out;
  std::string err;
  int code;
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Run run(const std::string& args) {
  const std::string out_path = "cli_run.out", err_path = "cli_run.err";
  std::string cmd = std::string("'") + SCHEMATA_CLI + "' " + args + " >" + out_path + " 2>" + err_path;
  int status = std::system(cmd.c_str());
  Run r{slurp(out_path), slurp(err_path), WIFEXITED(status) ? WEXITSTATUS(status) : -1};
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

}  // namespace cli_test
