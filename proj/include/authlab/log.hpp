#pragma once

#include <string>

namespace authlab {

enum class LogLevel { Debug = 0, Info = 1, Warn = 2, Error = 3, Silent = 4 };

void set_log_level(LogLevel level);
LogLevel log_level();
// Parses debug|info|warn|error|silent; throws ConfigError otherwise.
LogLevel parse_log_level(const std::string& name);

void log_debug(const std::string& msg);
void log_info(const std::string& msg);
void log_warn(const std::string& msg);
void log_error(const std::string& msg);

}  // namespace authlab
