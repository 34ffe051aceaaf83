#pragma once

// Brute-force reference implementations. They read only the declared content
// of a graph (ids and edges) and recompute everything with plain matrices, so
// they share no closure code with the library.

#include <cstddef>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "pnog/netcore.hpp"

namespace pnog::oracle {

using BoolMatrix = std::vector<std::vector<bool>>;

struct RawGraph {
  std::vector<std::string> concepts;   // [0]=TOP, [1]=BOT, then declared
  std::vector<std::string> instances;  // [0]=EPS, then declared
  BoolMatrix subclass;                 // [sub][super], declared plus implicit TOP
  std::vector<std::pair<std::size_t, std::size_t>> equiv;
  std::vector<std::pair<std::size_t, std::size_t>> instance_of;
  bool through_equivalence = true;

  std::size_t concept_at(const std::string& id) const;
  std::size_t instance_at(const std::string& id) const;
};

RawGraph raw_graph(const OntologicalGraph& g);

// Warshall transitive closure (not reflexive).
BoolMatrix warshall(BoolMatrix m);

// descendants[ancestor][descendant] over SUBCLASS-OF, BOT excluded.
BoolMatrix descendants(const RawGraph& g);
// Union-find class id per concept.
std::vector<std::size_t> equiv_classes(const RawGraph& g);
// membership[instance][concept].
BoolMatrix membership(const RawGraph& g, bool through_equivalence = true);

std::set<std::string> denote(const Formula& f, const RawGraph& g);

bool enabled(const Pnog& net, const Marking& m, const std::string& transition);
Marking fire(const Pnog& net, const Marking& m, const std::string& transition);

// Every well-typed token vector for the net.
std::vector<Marking> all_markings(const Pnog& net);

struct ReachSet {
  std::set<Marking> nodes;
  std::set<std::tuple<Marking, std::string, Marking>> edges;
};

// Enumerates all token vectors, evaluates the transition relation on each,
// then keeps what is reachable from the initial marking.
ReachSet brute_force_reach(const Pnog& net);

Marking initial(const Pnog& net);

}  // namespace pnog::oracle
