#pragma once

#include <stdexcept>
#include <string>

namespace fmca {

enum class ErrorCode {
  kInvalidArgument = 1,
  kParseError,
  kOffsetCollision,
  kCellOutOfRange,
  kWrongNeighborhoodArity,
  kInstanceTooLarge,
  kFamilyOutOfRange,
  kGadgetConstructionFailed,
  kLayoutOverflow,
  kIo,
  kInternal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parse errors carry the 1-based line they were detected on (0 if unknown).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error(ErrorCode::kParseError,
              line > 0 ? "line " + std::to_string(line) + ": " + reason : reason),
        line_(line),
        reason_(reason) {}
  int line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  int line_;
  std::string reason_;
};

}  // namespace fmca
