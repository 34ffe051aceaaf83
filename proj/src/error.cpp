#include "pnog/error.hpp"

namespace pnog {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::UnknownReference: return "UnknownReference";
    case ErrorKind::SubclassCycle: return "SubclassCycle";
    case ErrorKind::ReservedIdUse: return "ReservedIdUse";
    case ErrorKind::UnknownConcept: return "UnknownConcept";
    case ErrorKind::UnknownInstance: return "UnknownInstance";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::IriCollision: return "IriCollision";
    case ErrorKind::UnknownAlias: return "UnknownAlias";
    case ErrorKind::GraphLoadFailure: return "GraphLoadFailure";
    case ErrorKind::ValidationFailure: return "ValidationFailure";
    case ErrorKind::UnknownTransition: return "UnknownTransition";
    case ErrorKind::NotEnabled: return "NotEnabled";
    case ErrorKind::ScriptStepNotEnabled: return "ScriptStepNotEnabled";
    case ErrorKind::InvalidNet: return "InvalidNet";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string compose(ErrorKind kind, const std::string& message, std::size_t line) {
  std::string out(to_string(kind));
  if (line != 0) out += " at line " + std::to_string(line);
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, std::string message, std::size_t line, std::size_t column)
    : std::runtime_error(compose(kind, message, line)),
      kind_(kind),
      line_(line),
      column_(column),
      detail_(std::move(message)) {}

}  // namespace pnog
