#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pnog/netcore.hpp"

namespace pnog {

struct OccurrenceEdge {
  std::size_t from = 0;
  std::string transition;
  std::size_t to = 0;

  bool operator==(const OccurrenceEdge&) const = default;
};

// Reachable markings in breadth-first discovery order; nodes[0] is the
// initial marking. Edges are listed in the order they were discovered.
struct OccurrenceGraph {
  std::vector<Marking> nodes;
  std::vector<OccurrenceEdge> edges;
  // expanded[k]: every enabled transition of nodes[k] has its edge recorded.
  std::vector<bool> expanded;
  bool truncated = false;

  const Marking& root() const { return nodes.front(); }
};

// Breadth-first exploration firing every enabled transition (net order) of
// every discovered marking. Stops, with `truncated` set, as soon as a new
// marking would exceed `max_states`. Throws InvalidArgument for max_states 0.
OccurrenceGraph build_occurrence_graph(const BoundNet& net, std::size_t max_states);

// Expanded nodes with no enabled transition, in discovery order. Unexpanded
// frontier nodes of a truncated graph are never reported.
std::vector<Marking> find_deadlocks(const OccurrenceGraph& graph, const BoundNet& net);

std::string export_dot(const OccurrenceGraph& graph);

}  // namespace pnog
