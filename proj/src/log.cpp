#include "authlab/log.hpp"

#include <atomic>
#include <iostream>
#include <mutex>

#include "authlab/errors.hpp"

namespace authlab {

namespace {
std::atomic<LogLevel> g_level{LogLevel::Info};
std::mutex g_mutex;

void emit(LogLevel level, const char* tag, const std::string& msg) {
  if (static_cast<int>(level) < static_cast<int>(g_level.load())) return;
  std::lock_guard<std::mutex> lock(g_mutex);
  std::cerr << tag << msg << "\n";
}
}  // namespace

void set_log_level(LogLevel level) { g_level.store(level); }
LogLevel log_level() { return g_level.load(); }

LogLevel parse_log_level(const std::string& name) {
  if (name == "debug") return LogLevel::Debug;
  if (name == "info") return LogLevel::Info;
  if (name == "warn") return LogLevel::Warn;
  if (name == "error") return LogLevel::Error;
  if (name == "silent") return LogLevel::Silent;
  throw ConfigError("unknown log level: " + name);
}

void log_debug(const std::string& msg) { emit(LogLevel::Debug, "[debug] ", msg); }
void log_info(const std::string& msg) { emit(LogLevel::Info, "[info] ", msg); }
void log_warn(const std::string& msg) { emit(LogLevel::Warn, "[warn] ", msg); }
void log_error(const std::string& msg) { emit(LogLevel::Error, "[error] ", msg); }

}  // namespace authlab
