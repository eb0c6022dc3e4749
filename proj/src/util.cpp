#include "pcarr/util.hpp"

#include <cstdio>
#include <fstream>

#include "json.hpp"

namespace pcarr {

namespace {
LogLevel g_level = LogLevel::warn;
}

void set_log_level(LogLevel level) { g_level = level; }

void set_log_level(const std::string& name) {
  if (name == "debug") g_level = LogLevel::debug;
  else if (name == "info") g_level = LogLevel::info;
  else if (name == "warn") g_level = LogLevel::warn;
  else if (name == "error") g_level = LogLevel::error;
}

void log(LogLevel level, const std::string& msg) {
  if (level < g_level) return;
  static const char* names[] = {"debug", "info", "warn", "error"};
  std::fprintf(stderr, "[%s] %s\n", names[static_cast<int>(level)], msg.c_str());
}

uint64_t fnv1a_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return 0;
  uint64_t h = 1469598103934665603ull;
  char buf[65536];
  while (in.read(buf, sizeof buf) || in.gcount() > 0) {
    for (std::streamsize i = 0; i < in.gcount(); ++i)
      h = (h ^ static_cast<unsigned char>(buf[i])) * 1099511628211ull;
    if (!in) break;
  }
  return h;
}

void write_manifest(const std::string& output_path, const Manifest& m) {
  nlohmann::json j;
  j["tool"] = "pcarr";
  j["format"] = 1;
  j["command"] = m.command;
  j["argv"] = m.argv;
  j["seed"] = m.seed;
  j["workers"] = m.workers;
  j["complete"] = m.complete;
  auto& inputs = j["inputs"] = nlohmann::json::array();
  for (const std::string& path : m.inputs) {
    char hex[32];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a_file(path)));
    inputs.push_back({{"path", path}, {"fnv1a64", hex}});
  }
  for (auto& [k, v] : m.extra) j[k] = v;
  std::ofstream out(output_path + ".manifest.json");
  out << j.dump(2) << "\n";
}

}  // namespace pcarr
