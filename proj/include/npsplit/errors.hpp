#pragma once

#include <stdexcept>
#include <string>

namespace npsplit {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A machine description failed validation (dangling state id, outgoing
// transition from a halting state, ...). Raised by run(); never by
// decode_program, which maps malformed codes to the dummy machine instead.
struct MachineError : Error {
  explicit MachineError(const std::string& what) : Error(what) {}
};

// An oracle consultation reached a string whose splitting value is not yet
// determined. The gate arithmetic is supposed to make this unreachable, so
// hitting it means the engine itself is broken.
struct CircularityError : Error {
  explicit CircularityError(const std::string& what) : Error(what) {}
};

// Invalid configuration (empty roster, member-D with k != 2, unknown names).
struct ConfigError : Error {
  explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace npsplit
