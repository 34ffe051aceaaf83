#pragma once

// Hand-rolled random generators for property tests.

#include <cstddef>
#include <random>
#include <string>

#include "pnog/netcore.hpp"

namespace pnog::gen {

using Rng = std::mt19937_64;

struct GraphParams {
  std::size_t max_concepts = 50;
  std::size_t max_edges = 200;
  std::size_t max_instances = 12;
  bool free_relations = true;
};

std::string identifier(Rng& rng, std::size_t max_tail = 8);

// Random declarations whose SUBCLASS-OF part is acyclic.
GraphDecls graph_decls(Rng& rng, const GraphParams& params);
OntologicalGraph graph(Rng& rng, const GraphParams& params, const std::string& name = "g");

Formula formula(Rng& rng);

struct NetParams {
  std::size_t max_places = 4;
  std::size_t max_transitions = 5;
  std::size_t max_concepts = 8;
  std::size_t max_instances = 6;
};

// A net that passes validate_net; graphs carry sources "g<k>.og".
Pnog net(Rng& rng, const NetParams& params);

// A random well-typed marking for `net`.
Marking marking(Rng& rng, const Pnog& net);

}  // namespace pnog::gen
