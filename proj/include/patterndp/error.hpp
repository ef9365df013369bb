#pragma once

#include <stdexcept>
#include <string>

namespace patterndp {

// Input data outside an operation's domain (empty series, non-finite bin,
// invalid partition, ...). Messages use 1-based bin indices.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Bad experiment or generator configuration.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file; the message names the offending 1-based line.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace patterndp
