// Copyright 2026 The occupancy-audio Authors
//
// Licensed under the Apache License, Version 2.0

#pragma once

#include <stdexcept>
#include <string>

namespace occ {

/// Coarse failure categories. The CLI maps these onto distinct exit codes.
enum class ErrorKind {
  invalid_argument,    // bad parameter value or malformed request
  io,                  // file could not be opened / read / written
  malformed_file,      // file exists but cannot be parsed
  unsupported_format,  // parseable, but a variant this toolkit does not handle
  constraint,          // domain constraint violated (density cap, min distance, ...)
  mismatch,            // incompatible inputs (sample rates, counts, frame specs)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace occ
