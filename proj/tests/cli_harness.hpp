#pragma once

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "irabi/cli.hpp"
#include "irabi/io.hpp"

namespace harness {

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

inline CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliRun r;
  r.code = irabi::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

/// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("irabi_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::vector<std::string> with_out(std::vector<std::string> args, const std::filesystem::path& dir) {
  args.push_back("--out-dir");
  args.push_back(dir.string());
  return args;
}

}  // namespace harness
