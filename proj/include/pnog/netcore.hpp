#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pnog/formula.hpp"
#include "pnog/ontograph.hpp"

namespace pnog {

enum class NetKind { CMPNOG, IMPNOG };

std::string_view to_string(NetKind kind);
std::optional<NetKind> parse_net_kind(std::string_view text);

// Content of one place. Empty tokens are the bottom concept (CMPNOG) or its
// unique instance (IMPNOG).
struct Token {
  enum class Kind { EmptyConcept, Concept, EmptyInstance, Instance };

  Kind kind = Kind::EmptyInstance;
  std::string id;  // empty for the two empty kinds

  static Token empty(NetKind net_kind);
  static Token concept_token(std::string id) { return {Kind::Concept, std::move(id)}; }
  static Token instance_token(std::string id) { return {Kind::Instance, std::move(id)}; }

  bool is_empty() const noexcept { return kind == Kind::EmptyConcept || kind == Kind::EmptyInstance; }

  auto operator<=>(const Token&) const = default;
};

// One token per place, in the net's place order.
using Marking = std::vector<Token>;

// `_` for empty tokens, the id otherwise.
std::string render_token(const Token& token);
// "(tok1,tok2,...)"
std::string render_marking(const Marking& marking);

struct GraphBinding {
  std::string alias;
  std::string source;  // path the graph was loaded from; empty when built in memory
  std::shared_ptr<const OntologicalGraph> graph;
};

struct PlaceDecl {
  std::string id;
  std::string graph_alias;
};

struct InputArc {
  std::string place;
  std::string transition;
  Formula formula;
};

// Output terms are plain ids: a concept (CMPNOG) or an instance (IMPNOG).
struct OutputArc {
  std::string transition;
  std::string place;
  std::string term;
};

// Declarative description of a Petri net over ontological graphs.
struct Pnog {
  std::string name = "net";
  NetKind kind = NetKind::IMPNOG;
  std::vector<GraphBinding> graphs;
  std::vector<PlaceDecl> places;
  std::vector<std::string> transitions;
  std::vector<InputArc> input_arcs;
  std::vector<OutputArc> output_arcs;
  Marking initial_marking;  // empty vector means all places empty
};

// Structural equality; graphs are compared by content, not by pointer.
bool net_equal(const Pnog& a, const Pnog& b);

enum class ValidationMode { Default, Strict };

struct Violation {
  enum class Site { Net, Graph, Place, Transition, InputArc, OutputArc, InitialMarking };

  Site site = Site::Net;
  std::string place;
  std::string transition;
  std::string alias;
  std::string message;
};

std::string describe(const Violation& violation);

using ValidationReport = std::vector<Violation>;

ValidationReport validate_net(const Pnog& net, ValidationMode mode = ValidationMode::Default);

// Why a transition is not enabled.
struct Blocker {
  enum class Reason { InputCondition, OutputNotEmpty };
  Reason reason;
  std::string place;
};

std::string describe(const Blocker& blocker);

// A validated net with arcs resolved to indices and each input arc's
// acceptance set precomputed over its place's token domain.
class BoundNet {
 public:
  // Throws Error(InvalidNet) listing the violations when validation fails.
  explicit BoundNet(Pnog net, ValidationMode mode = ValidationMode::Default);

  const Pnog& description() const noexcept { return net_; }
  NetKind kind() const noexcept { return net_.kind; }
  std::size_t place_count() const noexcept { return net_.places.size(); }
  std::size_t transition_count() const noexcept { return net_.transitions.size(); }
  const std::string& place_id(std::size_t p) const { return net_.places.at(p).id; }
  const std::string& transition_id(std::size_t t) const { return net_.transitions.at(t); }
  const OntologicalGraph& place_graph(std::size_t p) const { return *place_graphs_.at(p); }
  std::optional<std::size_t> place_index(std::string_view id) const;
  std::optional<std::size_t> transition_index(std::string_view id) const;
  // Throws Error(UnknownTransition).
  std::size_t require_transition(std::string_view id) const;

  const Marking& initial_marking() const noexcept { return initial_; }
  Token empty_token() const { return Token::empty(net_.kind); }

  // Empty string when well typed, otherwise a description of the first problem.
  std::string check_marking(const Marking& marking) const;

  std::optional<Blocker> blocker(const Marking& marking, std::size_t transition) const;
  bool enabled(const Marking& marking, std::size_t transition) const {
    return !blocker(marking, transition).has_value();
  }
  // Throws Error(NotEnabled) naming the failing condition.
  Marking fire(const Marking& marking, std::size_t transition) const;

  // Indices of input and output places of a transition, ascending.
  const std::vector<std::size_t>& input_places(std::size_t t) const { return transitions_.at(t).inputs_sorted; }
  const std::vector<std::size_t>& output_places(std::size_t t) const { return transitions_.at(t).outputs_sorted; }

 private:
  struct BoundInput {
    std::size_t place;
    // Accepted token ids: concept indices (CMPNOG) or instance indices (IMPNOG).
    std::vector<bool> accepts;
  };
  struct BoundOutput {
    std::size_t place;
    Token token;
  };
  struct BoundTransition {
    std::vector<BoundInput> inputs;
    std::vector<BoundOutput> outputs;
    std::vector<std::size_t> inputs_sorted;
    std::vector<std::size_t> outputs_sorted;
  };

  bool accepts(const BoundInput& input, const Token& token) const;

  Pnog net_;
  std::vector<std::shared_ptr<const OntologicalGraph>> place_graphs_;
  std::vector<BoundTransition> transitions_;
  std::map<std::string, std::size_t, std::less<>> place_lookup_;
  std::map<std::string, std::size_t, std::less<>> transition_lookup_;
  Marking initial_;
};

bool enabled(const BoundNet& net, const Marking& marking, std::string_view transition);
std::vector<std::string> enabled_transitions(const BoundNet& net, const Marking& marking);
Marking fire(const BoundNet& net, const Marking& marking, std::string_view transition);

struct TraceStep {
  std::string fired;
  Marking before;
  Marking after;
};

struct FirstPolicy {};
struct RandomPolicy {
  std::uint64_t seed = 0;
};
struct ScriptPolicy {
  std::vector<std::string> transitions;
};
using TracePolicy = std::variant<FirstPolicy, RandomPolicy, ScriptPolicy>;

// Fires one enabled transition per step until deadlock, `max_steps`, or the
// end of the script. Throws Error(ScriptStepNotEnabled) for a blocked script
// step; the error message carries the 1-based step index.
// `on_step` observes each step as it is fired, before any later failure.
std::vector<TraceStep> run_trace(const BoundNet& net, const TracePolicy& policy,
                                 std::size_t max_steps,
                                 const std::function<void(const TraceStep&)>& on_step = {});

// Uniform index in [0, bound) from a 64-bit Mersenne Twister; rejection
// sampling keeps the sequence identical across standard libraries.
class SeededChooser {
 public:
  explicit SeededChooser(std::uint64_t seed) : engine_(seed) {}
  std::size_t pick(std::size_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace pnog
