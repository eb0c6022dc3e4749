#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pcarr {

enum class LogLevel { debug = 0, info = 1, warn = 2, error = 3 };
void set_log_level(LogLevel level);
void set_log_level(const std::string& name);
void log(LogLevel level, const std::string& msg);

uint64_t fnv1a_file(const std::string& path);  // 0 when unreadable

// Writes <output>.manifest.json next to the run's primary output with
// everything needed to re-run the command bit-identically.
struct Manifest {
  std::string command;
  std::vector<std::string> argv;
  uint64_t seed = 0;
  int workers = 0;
  std::vector<std::string> inputs;
  bool complete = true;
  std::vector<std::pair<std::string, std::string>> extra;
};
void write_manifest(const std::string& output_path, const Manifest& m);

}  // namespace pcarr
