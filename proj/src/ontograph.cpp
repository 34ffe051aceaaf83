#include "pnog/ontograph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <utility>

#include "pnog/error.hpp"

namespace pnog {

bool is_identifier(std::string_view text) {
  if (text.empty() || !std::isalpha(static_cast<unsigned char>(text.front()))) return false;
  return std::all_of(text.begin() + 1, text.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
  });
}

bool is_reserved_id(std::string_view id) { return id == kTop || id == kBot || id == kEps; }

std::string_view edge_label(const RelationEdge& edge) {
  switch (edge.kind) {
    case EdgeKind::EquivTo: return kEquivToLabel;
    case EdgeKind::SubclassOf: return kSubclassOfLabel;
    case EdgeKind::InstanceOf: return kInstanceOfLabel;
    case EdgeKind::Other: return edge.label;
  }
  return edge.label;
}

RelationEdge equiv_edge(std::string a, std::string b) {
  if (b < a) std::swap(a, b);
  return {EdgeKind::EquivTo, std::move(a), std::move(b), {}};
}

RelationEdge subclass_edge(std::string sub, std::string super) {
  return {EdgeKind::SubclassOf, std::move(sub), std::move(super), {}};
}

RelationEdge instance_edge(std::string instance, std::string concept_id) {
  return {EdgeKind::InstanceOf, std::move(instance), std::move(concept_id), {}};
}

RelationEdge other_edge(std::string label, std::string source, std::string target) {
  return {EdgeKind::Other, std::move(source), std::move(target), std::move(label)};
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

std::optional<std::size_t> lookup(const std::vector<std::string>& sorted_names,
                                  std::size_t offset, std::string_view id) {
  auto it = std::lower_bound(sorted_names.begin(), sorted_names.end(), id);
  if (it == sorted_names.end() || *it != id) return std::nullopt;
  return offset + static_cast<std::size_t>(it - sorted_names.begin());
}

// Finds one SUBCLASS-OF cycle among declared concepts; returns the path
// c0 -> c1 -> ... -> c0 or an empty vector.
std::vector<std::size_t> find_cycle(const std::vector<std::vector<std::size_t>>& parents) {
  enum Color : char { White, Grey, Black };
  std::vector<Color> color(parents.size(), White);
  std::vector<std::size_t> on_path;
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // node, next parent slot

  for (std::size_t start = 0; start < parents.size(); ++start) {
    if (color[start] != White) continue;
    stack.emplace_back(start, 0);
    color[start] = Grey;
    on_path.push_back(start);
    while (!stack.empty()) {
      auto& [node, slot] = stack.back();
      if (slot < parents[node].size()) {
        std::size_t next = parents[node][slot++];
        if (color[next] == Grey) {
          auto from = std::find(on_path.begin(), on_path.end(), next);
          std::vector<std::size_t> cycle(from, on_path.end());
          cycle.push_back(next);
          return cycle;
        }
        if (color[next] == White) {
          color[next] = Grey;
          on_path.push_back(next);
          stack.emplace_back(next, 0);
        }
      } else {
        color[node] = Black;
        on_path.pop_back();
        stack.pop_back();
      }
    }
  }
  return {};
}

}  // namespace

std::optional<std::size_t> OntologicalGraph::concept_index(std::string_view id) const {
  if (id == kTop) return kTopIndex;
  if (id == kBot) return kBotIndex;
  return lookup(declared_concepts_, 2, id);
}

std::optional<std::size_t> OntologicalGraph::instance_index(std::string_view id) const {
  if (id == kEps) return kEpsIndex;
  return lookup(declared_instances_, 1, id);
}

std::size_t OntologicalGraph::require_concept(std::string_view id) const {
  if (auto index = concept_index(id)) return *index;
  throw Error(ErrorKind::UnknownConcept,
              "concept '" + std::string(id) + "' is not declared in ontology '" + name_ + "'");
}

std::size_t OntologicalGraph::require_instance(std::string_view id) const {
  if (auto index = instance_index(id)) return *index;
  throw Error(ErrorKind::UnknownInstance,
              "instance '" + std::string(id) + "' is not declared in ontology '" + name_ + "'");
}

ConceptSet OntologicalGraph::equiv_class(std::string_view concept_id) const {
  std::size_t c = require_concept(concept_id);
  ConceptSet out;
  for (std::size_t other = 0; other < concept_count(); ++other)
    if (in_same_equiv_class(c, other)) out.insert(concept_names_[other]);
  return out;
}

ConceptSet OntologicalGraph::descendants(std::string_view concept_id) const {
  std::size_t c = require_concept(concept_id);
  ConceptSet out;
  for (std::size_t other = 0; other < concept_count(); ++other)
    if (is_descendant(c, other)) out.insert(concept_names_[other]);
  return out;
}

ConceptSet OntologicalGraph::ancestors(std::string_view concept_id) const {
  std::size_t c = require_concept(concept_id);
  ConceptSet out;
  for (std::size_t other = 0; other < concept_count(); ++other)
    if (is_descendant(other, c)) out.insert(concept_names_[other]);
  return out;
}

bool OntologicalGraph::is_instance_of(std::string_view instance_id,
                                      std::string_view concept_id) const {
  std::size_t i = require_instance(instance_id);
  std::size_t c = require_concept(concept_id);
  return is_member(i, c);
}

InstanceSet OntologicalGraph::instances_of(std::string_view concept_id) const {
  std::size_t c = require_concept(concept_id);
  InstanceSet out;
  for (std::size_t i = 0; i < instance_count(); ++i)
    if (is_member(i, c)) out.insert(instance_names_[i]);
  return out;
}

ConceptSet OntologicalGraph::concepts_of(std::string_view instance_id) const {
  std::size_t i = require_instance(instance_id);
  ConceptSet out;
  for (std::size_t c = 0; c < concept_count(); ++c)
    if (is_member(i, c)) out.insert(concept_names_[c]);
  return out;
}

bool OntologicalGraph::same_content(const OntologicalGraph& other) const {
  return declared_concepts_ == other.declared_concepts_ &&
         declared_instances_ == other.declared_instances_ && edges_ == other.edges_;
}

GraphClosures OntologicalGraph::recompute_closures() const {
  const std::size_t n = concept_count();
  GraphClosures out;

  // Equivalence classes by union-find; the root is the smallest index.
  out.equiv_root.resize(n);
  std::iota(out.equiv_root.begin(), out.equiv_root.end(), std::size_t{0});
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t d : equiv_neighbors_[c]) {
      std::size_t a = find_root(out.equiv_root, c);
      std::size_t b = find_root(out.equiv_root, d);
      if (a != b) out.equiv_root[std::max(a, b)] = std::min(a, b);
    }
  }
  for (std::size_t c = 0; c < n; ++c) out.equiv_root[c] = find_root(out.equiv_root, c);

  // Strict descendants: walk each concept's ancestor chain and mark it.
  out.descendant.assign(n, std::vector<bool>(n, false));
  for (std::size_t c = 0; c < n; ++c) {
    if (c == kBotIndex) continue;
    std::vector<std::size_t> work(parents_[c].begin(), parents_[c].end());
    while (!work.empty()) {
      std::size_t up = work.back();
      work.pop_back();
      if (out.descendant[up][c]) continue;
      out.descendant[up][c] = true;
      work.insert(work.end(), parents_[up].begin(), parents_[up].end());
    }
  }

  // Instance membership: upward closure from the asserted types.
  const std::size_t m = instance_count();
  out.membership.assign(m, std::vector<bool>(n, false));
  out.membership[kEpsIndex][kBotIndex] = true;
  for (std::size_t i = 1; i < m; ++i) {
    auto& row = out.membership[i];
    row[kTopIndex] = true;
    std::deque<std::size_t> work(asserted_types_[i].begin(), asserted_types_[i].end());
    while (!work.empty()) {
      std::size_t c = work.front();
      work.pop_front();
      if (row[c]) continue;
      row[c] = true;
      for (std::size_t up : parents_[c])
        if (!row[up]) work.push_back(up);
      if (mode_ == MembershipMode::ClosedOverEquivalence)
        for (std::size_t eq : equiv_neighbors_[c])
          if (!row[eq]) work.push_back(eq);
    }
  }
  return out;
}

OntologicalGraph build_graph(std::string name, const GraphDecls& decls, MembershipMode mode) {
  if (!is_identifier(name))
    throw Error(ErrorKind::InvalidArgument, "ontology name '" + name + "' is not an identifier");

  OntologicalGraph g;
  g.name_ = std::move(name);
  g.mode_ = mode;

  std::map<std::string, std::size_t, std::less<>> concept_lines;
  for (const auto& decl : decls.concepts) {
    if (is_reserved_id(decl.id))
      throw Error(ErrorKind::ReservedIdUse, "'" + decl.id + "' is reserved and cannot be declared",
                  decl.line);
    if (!is_identifier(decl.id))
      throw Error(ErrorKind::SyntaxError, "'" + decl.id + "' is not a valid identifier", decl.line);
    if (!concept_lines.emplace(decl.id, decl.line).second)
      throw Error(ErrorKind::DuplicateId, "concept '" + decl.id + "' declared twice", decl.line);
  }
  std::map<std::string, std::size_t, std::less<>> instance_lines;
  for (const auto& decl : decls.instances) {
    if (is_reserved_id(decl.id))
      throw Error(ErrorKind::ReservedIdUse, "'" + decl.id + "' is reserved and cannot be declared",
                  decl.line);
    if (!is_identifier(decl.id))
      throw Error(ErrorKind::SyntaxError, "'" + decl.id + "' is not a valid identifier", decl.line);
    if (!instance_lines.emplace(decl.id, decl.line).second)
      throw Error(ErrorKind::DuplicateId, "instance '" + decl.id + "' declared twice", decl.line);
    if (concept_lines.count(decl.id))
      throw Error(ErrorKind::DuplicateId,
                  "'" + decl.id + "' is declared as both a concept and an instance", decl.line);
  }
  for (const auto& [id, line] : concept_lines) g.declared_concepts_.push_back(id);
  for (const auto& [id, line] : instance_lines) g.declared_instances_.push_back(id);

  g.concept_names_ = {std::string(kTop), std::string(kBot)};
  g.concept_names_.insert(g.concept_names_.end(), g.declared_concepts_.begin(),
                          g.declared_concepts_.end());
  g.instance_names_ = {std::string(kEps)};
  g.instance_names_.insert(g.instance_names_.end(), g.declared_instances_.begin(),
                           g.declared_instances_.end());

  const std::size_t n = g.concept_names_.size();
  g.parents_.assign(n, {});
  g.equiv_neighbors_.assign(n, {});
  g.asserted_types_.assign(g.instance_names_.size(), {});

  auto reserved = [](std::string_view id, std::size_t line, std::string_view role) {
    return Error(ErrorKind::ReservedIdUse,
                 "'" + std::string(id) + "' cannot be used as " + std::string(role), line);
  };
  // Declared concept, or TOP where allowed.
  auto concept_ref = [&](std::string_view id, std::size_t line, bool allow_top,
                         std::string_view role) -> std::size_t {
    if (id == kTop && allow_top) return OntologicalGraph::kTopIndex;
    if (is_reserved_id(id)) throw reserved(id, line, role);
    if (auto index = lookup(g.declared_concepts_, 2, id)) return *index;
    throw Error(ErrorKind::UnknownReference,
                "undeclared concept '" + std::string(id) + "' in " + std::string(role), line);
  };
  auto instance_ref = [&](std::string_view id, std::size_t line,
                          std::string_view role) -> std::size_t {
    if (is_reserved_id(id)) throw reserved(id, line, role);
    if (auto index = lookup(g.declared_instances_, 1, id)) return *index;
    throw Error(ErrorKind::UnknownReference,
                "undeclared instance '" + std::string(id) + "' in " + std::string(role), line);
  };

  std::map<RelationEdge, std::size_t> edges;  // edge -> first line
  for (const auto& decl : decls.edges) {
    RelationEdge edge = decl.edge;
    switch (edge.kind) {
      case EdgeKind::SubclassOf: {
        std::size_t sub = concept_ref(edge.source, decl.line, false, "a subclass");
        std::size_t super = concept_ref(edge.target, decl.line, true, "a superclass");
        if (edges.emplace(edge, decl.line).second) g.parents_[sub].push_back(super);
        break;
      }
      case EdgeKind::EquivTo: {
        std::size_t a = concept_ref(edge.source, decl.line, false, "an equivalence member");
        std::size_t b = concept_ref(edge.target, decl.line, false, "an equivalence member");
        if (a == b) break;
        edge = equiv_edge(edge.source, edge.target);
        if (edges.emplace(edge, decl.line).second) {
          g.equiv_neighbors_[a].push_back(b);
          g.equiv_neighbors_[b].push_back(a);
        }
        break;
      }
      case EdgeKind::InstanceOf: {
        std::size_t i = instance_ref(edge.source, decl.line, "an instance");
        std::size_t c = concept_ref(edge.target, decl.line, true, "an instance-of target");
        if (edges.emplace(edge, decl.line).second) g.asserted_types_[i].push_back(c);
        break;
      }
      case EdgeKind::Other: {
        if (edge.label.empty() || edge.label == kEquivToLabel ||
            edge.label == kSubclassOfLabel || edge.label == kInstanceOfLabel ||
            edge.label.find_first_of("\"\n\r") != std::string::npos)
          throw Error(ErrorKind::SyntaxError,
                      "free-text relation label '" + edge.label + "' is empty, reserved, or contains a quote or line break",
                      decl.line);
        if (is_reserved_id(edge.source)) throw reserved(edge.source, decl.line, "a relation source");
        if (!lookup(g.declared_concepts_, 2, edge.source) &&
            !lookup(g.declared_instances_, 1, edge.source))
          throw Error(ErrorKind::UnknownReference,
                      "undeclared relation source '" + edge.source + "'", decl.line);
        concept_ref(edge.target, decl.line, true, "a relation target");
        edges.emplace(edge, decl.line);
        break;
      }
    }
  }

  // Check acyclicity on declared edges only, before TOP is attached.
  if (auto cycle = find_cycle(g.parents_); !cycle.empty()) {
    std::string witness;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) witness += " -> ";
      witness += g.concept_names_[cycle[k]];
    }
    std::size_t line = edges.at(subclass_edge(g.concept_names_[cycle[0]],
                                              g.concept_names_[cycle[1]]));
    throw Error(ErrorKind::SubclassCycle, "SUBCLASS-OF cycle " + witness, line);
  }
  for (std::size_t c = 2; c < n; ++c)
    if (g.parents_[c].empty()) g.parents_[c].push_back(OntologicalGraph::kTopIndex);
  for (auto& row : g.parents_) std::sort(row.begin(), row.end());
  for (auto& row : g.equiv_neighbors_) std::sort(row.begin(), row.end());
  for (auto& row : g.asserted_types_) std::sort(row.begin(), row.end());

  g.edges_.reserve(edges.size());
  for (const auto& [edge, line] : edges) g.edges_.push_back(edge);
  g.closures_ = g.recompute_closures();
  return g;
}

}  // namespace pnog
