#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "pnog/ontograph.hpp"

namespace pnog {

// Arc formula over the concepts of one ontological graph:
//   c    Bare        the concept itself
//   {c}  Singleton   the one-element set {c}
//   [c]  EquivClass  c and its synonyms
//   <c>  SubTree     strict subclasses of c
struct Formula {
  enum class Form { Bare, Singleton, EquivClass, SubTree };

  Form form = Form::Bare;
  std::string concept_id;

  auto operator<=>(const Formula&) const = default;
};

std::string_view to_string(Formula::Form form);

// Throws Error(SyntaxError) with a 0-based column, or Error(EmptyInput).
Formula parse_formula(std::string_view text);
std::string format_formula(const Formula& formula);

// Concept set the formula denotes in `graph`; throws UnknownConcept.
ConceptSet denote(const Formula& formula, const OntologicalGraph& graph);

}  // namespace pnog
