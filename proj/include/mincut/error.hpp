#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mincut {

enum class ErrorCode {
  IndexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  EmptyGraph,
  SizeTooSmall,
  TooLarge,
  BudgetExceeded,
  IdenticalCuts,
  NotCrossing,
  Disconnected,
  InvalidSpec,
  ParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::IdenticalCuts: return "IdenticalCuts";
    case ErrorCode::NotCrossing: return "NotCrossing";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the codes above so that
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mincut
