#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace noosphere {

enum class ErrorKind {
  kDiverged,
  kDomain,
  kNoCoexistence,
  kCapacity,
  kUnsupported,
  kUnclassified,
  kProtectedRegion,
  kMissingStrand,
  kWidthMismatch,
  kUnknownRegister,
  kDeadMachine,
  kSterileMachine,
  kExtinctColony,
  kParse,
};

std::string_view to_string(ErrorKind kind);

// Base exception for every failure raised by the library. The kind is the
// stable, testable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failure in one of the plain-text formats. `line` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace noosphere
