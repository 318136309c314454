#include "theta_guide/log.hpp"

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>

namespace theta_guide {

namespace {

LogLevel from_environment() {
  const char* env = std::getenv("THETA_GUIDE_LOG");
  if (!env) return LogLevel::off;
  return parse_log_level(env).value_or(LogLevel::off);
}

std::atomic<LogLevel>& current() {
  static std::atomic<LogLevel> level{from_environment()};
  return level;
}

std::mutex& output_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

std::optional<LogLevel> parse_log_level(const std::string& s) {
  if (s == "off") return LogLevel::off;
  if (s == "info") return LogLevel::info;
  if (s == "trace") return LogLevel::trace;
  return std::nullopt;
}

LogLevel log_level() { return current().load(); }

void set_log_level(LogLevel level) { current().store(level); }

void log_line(LogLevel level, const std::string& message) {
  if (level == LogLevel::off || static_cast<int>(level) > static_cast<int>(log_level())) return;
  std::lock_guard lock(output_mutex());
  std::cerr << (level == LogLevel::info ? "[info] " : "[trace] ") << message << '\n';
}

}  // namespace theta_guide
