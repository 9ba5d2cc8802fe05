#include "noosphere/error.hpp"

namespace noosphere {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDiverged: return "diverged";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kNoCoexistence: return "no-coexistence";
    case ErrorKind::kCapacity: return "capacity";
    case ErrorKind::kUnsupported: return "unsupported";
    case ErrorKind::kUnclassified: return "unclassified";
    case ErrorKind::kProtectedRegion: return "protected-region";
    case ErrorKind::kMissingStrand: return "missing-strand";
    case ErrorKind::kWidthMismatch: return "width-mismatch";
    case ErrorKind::kUnknownRegister: return "unknown-register";
    case ErrorKind::kDeadMachine: return "dead-machine";
    case ErrorKind::kSterileMachine: return "sterile-machine";
    case ErrorKind::kExtinctColony: return "extinct-colony";
    case ErrorKind::kParse: return "parse";
  }
  return "unknown";
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(ErrorKind::kParse, "line " + std::to_string(line) + ": " + message),
      line_(line) {}

}  // namespace noosphere
