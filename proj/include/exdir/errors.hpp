#pragma once

#include <stdexcept>
#include <string>

namespace exdir {

// Malformed input: edge lists, family specs, vertex sets, sequences.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A size cap was exceeded (graph cap, solver cap, search cap).
class CapError : public std::runtime_error {
 public:
  explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace exdir
