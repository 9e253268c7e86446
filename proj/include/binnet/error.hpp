#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace binnet {

// Error families map onto CLI exit codes: 2 config, 3 io, 4 numeric/shape.
struct Error : std::runtime_error {
  int exit_code;
  Error(std::string msg, int code) : std::runtime_error(std::move(msg)), exit_code(code) {}
};

struct ConfigError : Error {
  explicit ConfigError(std::string msg) : Error(std::move(msg), 2) {}
};

struct IoError : Error {
  explicit IoError(std::string msg) : Error(std::move(msg), 3) {}
};

struct NumericError : Error {
  explicit NumericError(std::string msg) : Error(std::move(msg), 4) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw NumericError(msg);
}

}  // namespace binnet
