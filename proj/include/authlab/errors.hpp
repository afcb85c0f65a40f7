#pragma once

#include <stdexcept>
#include <string>

namespace authlab {

// Bad flags, bad config file, missing prerequisite artifact. Exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input data. Exit code 3.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Lookup of an id that does not exist in the dataset.
class NotFoundError : public DataError {
 public:
  explicit NotFoundError(const std::string& msg) : DataError(msg) {}
};

}  // namespace authlab
