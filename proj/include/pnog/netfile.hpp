#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pnog/error.hpp"
#include "pnog/netcore.hpp"

namespace pnog {

// Net description format (`.pnog`):
//
//   net <name> kind=<CMPNOG|IMPNOG>
//   use <graphfile> as <alias>
//   place <id> ontology=<alias>
//   transition <id>
//   in <place> <transition> "<formula>"
//   out <transition> <place> "<term>"
//   m0 <place> <token-id>
//
// Place and transition order is declaration order. Places without an m0 line
// start empty; `EPS`, `BOT` and `_` also denote the empty token.

using GraphLoader = std::function<std::shared_ptr<const OntologicalGraph>(const std::string& path)>;

struct LocatedViolation {
  Violation violation;
  std::size_t line = 0;
};

std::string describe(const LocatedViolation& located);

// Thrown by parse_netfile when the parsed net fails validation.
class NetValidationError : public Error {
 public:
  explicit NetValidationError(std::vector<LocatedViolation> violations);
  const std::vector<LocatedViolation>& violations() const noexcept { return violations_; }

 private:
  std::vector<LocatedViolation> violations_;
};

// Throws Error (SyntaxError, UnknownAlias, GraphLoadFailure) or
// NetValidationError.
Pnog parse_netfile(std::string_view text, const GraphLoader& loader,
                   ValidationMode mode = ValidationMode::Default);

std::string serialize_netfile(const Pnog& net);

}  // namespace pnog
