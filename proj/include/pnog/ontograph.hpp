#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pnog {

// Reserved ids injected into every graph.
inline constexpr std::string_view kTop = "TOP";
inline constexpr std::string_view kBot = "BOT";
inline constexpr std::string_view kEps = "EPS";

inline constexpr std::string_view kEquivToLabel = "EQUIV-TO";
inline constexpr std::string_view kSubclassOfLabel = "SUBCLASS-OF";
inline constexpr std::string_view kInstanceOfLabel = "INSTANCE-OF";

// An ASCII letter followed by any of [A-Za-z0-9_].
bool is_identifier(std::string_view text);
bool is_reserved_id(std::string_view id);

enum class EdgeKind { EquivTo, SubclassOf, InstanceOf, Other };

struct RelationEdge {
  EdgeKind kind = EdgeKind::Other;
  std::string source;
  std::string target;
  // Free-text label; only meaningful for EdgeKind::Other.
  std::string label;

  auto operator<=>(const RelationEdge&) const = default;
};

std::string_view edge_label(const RelationEdge& edge);

RelationEdge equiv_edge(std::string a, std::string b);
RelationEdge subclass_edge(std::string sub, std::string super);
RelationEdge instance_edge(std::string instance, std::string concept_id);
RelationEdge other_edge(std::string label, std::string source, std::string target);

// Declarations as written by a loader. `line` is carried into diagnostics.
struct ConceptDecl {
  std::string id;
  std::size_t line = 0;
};

struct InstanceDecl {
  std::string id;
  std::size_t line = 0;
};

struct EdgeDecl {
  RelationEdge edge;
  std::size_t line = 0;
};

struct GraphDecls {
  std::vector<ConceptDecl> concepts;
  std::vector<InstanceDecl> instances;
  std::vector<EdgeDecl> edges;
};

// How INSTANCE-OF resolution treats EQUIV-TO. `ClosedOverEquivalence` lets
// instances of a synonym class belong to both classes; `Strict` follows only
// SUBCLASS-OF descent.
enum class MembershipMode { ClosedOverEquivalence, Strict };

using ConceptSet = std::set<std::string, std::less<>>;
using InstanceSet = std::set<std::string, std::less<>>;

// Derived tables over the index space of a graph. Concept index 0 is TOP and 1
// is BOT; instance index 0 is EPS. Declared ids follow in lexicographic order.
struct GraphClosures {
  std::vector<std::size_t> equiv_root;               // per concept
  std::vector<std::vector<bool>> descendant;         // [ancestor][descendant]
  std::vector<std::vector<bool>> membership;         // [instance][concept]

  bool operator==(const GraphClosures&) const = default;
};

// Immutable ontological graph. Build through build_graph; afterwards every
// query is a read of the precomputed closures.
class OntologicalGraph {
 public:
  static constexpr std::size_t kTopIndex = 0;
  static constexpr std::size_t kBotIndex = 1;
  static constexpr std::size_t kEpsIndex = 0;

  const std::string& name() const noexcept { return name_; }
  MembershipMode membership_mode() const noexcept { return mode_; }

  // Declared (non-reserved) ids, sorted.
  const std::vector<std::string>& declared_concepts() const noexcept { return declared_concepts_; }
  const std::vector<std::string>& declared_instances() const noexcept { return declared_instances_; }
  // Declared edges without duplicates, in sorted order. EQUIV-TO edges keep
  // the lexicographically smaller id as source.
  const std::vector<RelationEdge>& edges() const noexcept { return edges_; }

  bool has_concept(std::string_view id) const { return concept_index(id).has_value(); }
  bool has_instance(std::string_view id) const { return instance_index(id).has_value(); }

  std::optional<std::size_t> concept_index(std::string_view id) const;
  std::optional<std::size_t> instance_index(std::string_view id) const;
  std::size_t concept_count() const noexcept { return concept_names_.size(); }
  std::size_t instance_count() const noexcept { return instance_names_.size(); }
  const std::string& concept_name(std::size_t index) const { return concept_names_.at(index); }
  const std::string& instance_name(std::size_t index) const { return instance_names_.at(index); }

  ConceptSet equiv_class(std::string_view concept_id) const;
  ConceptSet descendants(std::string_view concept_id) const;
  bool is_instance_of(std::string_view instance_id, std::string_view concept_id) const;
  InstanceSet instances_of(std::string_view concept_id) const;
  // Every concept the instance belongs to (inverse view of instances_of).
  ConceptSet concepts_of(std::string_view instance_id) const;
  // Strict ancestors of a concept under SUBCLASS-OF, TOP included.
  ConceptSet ancestors(std::string_view concept_id) const;

  bool in_same_equiv_class(std::size_t a, std::size_t b) const {
    return closures_.equiv_root[a] == closures_.equiv_root[b];
  }
  bool is_descendant(std::size_t ancestor, std::size_t descendant) const {
    return closures_.descendant[ancestor][descendant];
  }
  bool is_member(std::size_t instance, std::size_t concept_idx) const {
    return closures_.membership[instance][concept_idx];
  }

  const GraphClosures& closures() const noexcept { return closures_; }
  // Recomputes the closure tables from the declared edges.
  GraphClosures recompute_closures() const;

  // Same declared content (ids and edges); the name is ignored.
  bool same_content(const OntologicalGraph& other) const;
  friend bool operator==(const OntologicalGraph& a, const OntologicalGraph& b) {
    return a.name_ == b.name_ && a.same_content(b);
  }

 private:
  friend OntologicalGraph build_graph(std::string name, const GraphDecls& decls,
                                      MembershipMode mode);

  std::size_t require_concept(std::string_view id) const;
  std::size_t require_instance(std::string_view id) const;

  std::string name_;
  MembershipMode mode_ = MembershipMode::ClosedOverEquivalence;
  std::vector<std::string> declared_concepts_;
  std::vector<std::string> declared_instances_;
  std::vector<RelationEdge> edges_;
  std::vector<std::string> concept_names_;
  std::vector<std::string> instance_names_;
  // Direct declared superclasses per concept index (implicit TOP included).
  std::vector<std::vector<std::size_t>> parents_;
  std::vector<std::vector<std::size_t>> equiv_neighbors_;
  std::vector<std::vector<std::size_t>> asserted_types_;  // per instance
  GraphClosures closures_;
};

// Validates the declarations, injects TOP/BOT/EPS and computes the closures.
// Throws Error with DuplicateId, UnknownReference, SubclassCycle or
// ReservedIdUse; the error carries the offending declaration's line.
OntologicalGraph build_graph(std::string name, const GraphDecls& decls,
                             MembershipMode mode = MembershipMode::ClosedOverEquivalence);

}  // namespace pnog
