#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pnog/ontograph.hpp"

namespace pnog {

// Native line-based format (`.og`):
//
//   ontology <name>
//   concept <id>
//   instance <id> [<conceptId>]
//   subclass <sub> <super>
//   equiv <id> <id>
//   relation <label> <source> <target>
//
// `#` starts a comment. An instance line may repeat with different concepts
// to add memberships. Errors carry the 1-based line of the declaration.
OntologicalGraph parse_native_graph(std::string_view text,
                                    MembershipMode mode = MembershipMode::ClosedOverEquivalence);

// Canonical text: declarations sorted within each kind, kinds in the order
// above, no reserved ids and no implicit TOP edges.
std::string serialize_native_graph(const OntologicalGraph& graph);

struct OwlImportResult {
  OntologicalGraph graph;
  // One entry per skipped (unsupported) axiom, "line N: skipped <Axiom>...".
  std::vector<std::string> warnings;

  std::size_t skipped() const noexcept { return warnings.size(); }
};

// Imports the class/individual fragment of an OWL 2 Functional-Style Syntax
// document. Throws SyntaxError or IriCollision; build_graph errors pass through.
OwlImportResult import_owl_functional(std::string_view text,
                                      MembershipMode mode = MembershipMode::ClosedOverEquivalence);

// Local id of an IRI: the fragment after '#', otherwise the last path segment.
std::string iri_local_name(std::string_view iri);

}  // namespace pnog
