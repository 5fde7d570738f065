// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace sigmahg {

enum class ErrorCode {
  validation,
  precondition,
  cap_exceeded,
  colouring,
  size,
  parse,
  internal,
};

const char* to_string(ErrorCode code);

// Single exception type for the library; the code lets the C layer map
// failures onto status values without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sigmahg
