#include "pnog/analysis.hpp"

#include <deque>
#include <map>
#include <sstream>

#include "pnog/error.hpp"

namespace pnog {

OccurrenceGraph build_occurrence_graph(const BoundNet& net, std::size_t max_states) {
  if (max_states == 0) throw Error(ErrorKind::InvalidArgument, "max_states must be at least 1");

  OccurrenceGraph og;
  std::map<Marking, std::size_t> index;
  std::deque<std::size_t> frontier;

  og.nodes.push_back(net.initial_marking());
  og.expanded.push_back(false);
  index.emplace(og.nodes.front(), 0);
  frontier.push_back(0);

  while (!frontier.empty()) {
    std::size_t current = frontier.front();
    frontier.pop_front();
    for (std::size_t t = 0; t < net.transition_count(); ++t) {
      if (!net.enabled(og.nodes[current], t)) continue;
      Marking next = net.fire(og.nodes[current], t);
      auto found = index.find(next);
      std::size_t target;
      if (found != index.end()) {
        target = found->second;
      } else {
        if (og.nodes.size() >= max_states) {
          og.truncated = true;
          return og;
        }
        target = og.nodes.size();
        index.emplace(next, target);
        og.nodes.push_back(std::move(next));
        og.expanded.push_back(false);
        frontier.push_back(target);
      }
      og.edges.push_back({current, net.transition_id(t), target});
    }
    og.expanded[current] = true;
  }
  return og;
}

std::vector<Marking> find_deadlocks(const OccurrenceGraph& graph, const BoundNet& net) {
  std::vector<bool> has_successor(graph.nodes.size(), false);
  for (const auto& edge : graph.edges) has_successor[edge.from] = true;

  std::vector<Marking> out;
  for (std::size_t k = 0; k < graph.nodes.size(); ++k) {
    if (!graph.expanded[k] || has_successor[k]) continue;
    bool any = false;
    for (std::size_t t = 0; t < net.transition_count() && !any; ++t)
      any = net.enabled(graph.nodes[k], t);
    if (!any) out.push_back(graph.nodes[k]);
  }
  return out;
}

std::string export_dot(const OccurrenceGraph& graph) {
  std::ostringstream out;
  out << "digraph occurrence_graph {\n";
  out << "  node [shape=box];\n";
  for (std::size_t k = 0; k < graph.nodes.size(); ++k) {
    out << "  n" << k << " [label=\"" << render_marking(graph.nodes[k]) << '"';
    if (k == 0) out << ", peripheries=2";
    out << "];\n";
  }
  for (const auto& edge : graph.edges)
    out << "  n" << edge.from << " -> n" << edge.to << " [label=\"" << edge.transition << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace pnog
