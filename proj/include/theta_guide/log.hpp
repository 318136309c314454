#pragma once

#include <optional>
#include <string>

namespace theta_guide {

enum class LogLevel { off, info, trace };

/// Initialized from THETA_GUIDE_LOG (off, info or trace; default off).
LogLevel log_level();
void set_log_level(LogLevel level);
std::optional<LogLevel> parse_log_level(const std::string& s);

/// Writes one line to stderr when `level` is enabled.
void log_line(LogLevel level, const std::string& message);

}  // namespace theta_guide
