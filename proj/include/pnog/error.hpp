#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pnog {

enum class ErrorKind {
  DuplicateId,
  UnknownReference,
  SubclassCycle,
  ReservedIdUse,
  UnknownConcept,
  UnknownInstance,
  SyntaxError,
  EmptyInput,
  IriCollision,
  UnknownAlias,
  GraphLoadFailure,
  ValidationFailure,
  UnknownTransition,
  NotEnabled,
  ScriptStepNotEnabled,
  InvalidNet,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type. `line` is 1-based and
// zero when the failure has no source location; `column` is a 0-based offset
// used by the formula parser.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::size_t line = 0,
        std::size_t column = 0);

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
  std::string detail_;
};

}  // namespace pnog
