// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace apcen {

// Broad categories used to map exceptions onto C API status codes and
// CLI exit codes.
enum class ErrorKind {
  InvalidArgument,  // bad configuration, precondition violation
  Io,               // filesystem failures
  Format,           // container/magic/layout problems in files
  Unsupported,      // valid file, unsupported property (rate, channels, codec)
  Numeric,          // non-finite inputs, degenerate signals
  State,            // missing forward cache/tape, uninitialized handles
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message),
        kind_(kind),
        name_(std::move(name)) {}

  ErrorKind kind() const { return kind_; }
  // Stable error name from the module contracts, e.g. "UnsupportedFormat".
  const std::string& name() const { return name_; }

private:
  ErrorKind kind_;
  std::string name_;
};

[[noreturn]] inline void raise(ErrorKind kind, const char* name,
                               const std::string& message) {
  throw Error(kind, name, message);
}

}  // namespace apcen
