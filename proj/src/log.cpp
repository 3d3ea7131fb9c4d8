#include "tashkeel/log.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

namespace tashkeel {

namespace {

LogLevel parse_level(const char* value) {
  if (value == nullptr) return LogLevel::Warn;
  std::string v(value);
  if (v == "debug") return LogLevel::Debug;
  if (v == "info") return LogLevel::Info;
  if (v == "warn") return LogLevel::Warn;
  if (v == "error") return LogLevel::Error;
  if (v == "off") return LogLevel::Off;
  return LogLevel::Warn;
}

const char* level_name(LogLevel level) {
  switch (level) {
    case LogLevel::Debug: return "debug";
    case LogLevel::Info: return "info";
    case LogLevel::Warn: return "warn";
    case LogLevel::Error: return "error";
    case LogLevel::Off: return "off";
  }
  return "?";
}

}  // namespace

LogLevel log_level() {
  static const LogLevel level = parse_level(std::getenv("TASHKEEL_EVAL_LOG"));
  return level;
}

bool log_enabled(LogLevel level) { return level >= log_level(); }

void log_msg(LogLevel level, std::string_view msg) {
  if (!log_enabled(level)) return;
  std::fprintf(stderr, "tashkeel-eval %s: %.*s\n", level_name(level),
               static_cast<int>(msg.size()), msg.data());
}

}  // namespace tashkeel
