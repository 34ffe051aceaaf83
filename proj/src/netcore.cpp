#include "pnog/netcore.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "pnog/error.hpp"

namespace pnog {

std::string_view to_string(NetKind kind) {
  return kind == NetKind::CMPNOG ? "CMPNOG" : "IMPNOG";
}

std::optional<NetKind> parse_net_kind(std::string_view text) {
  if (text == "CMPNOG") return NetKind::CMPNOG;
  if (text == "IMPNOG") return NetKind::IMPNOG;
  return std::nullopt;
}

Token Token::empty(NetKind net_kind) {
  return {net_kind == NetKind::CMPNOG ? Kind::EmptyConcept : Kind::EmptyInstance, {}};
}

std::string render_token(const Token& token) { return token.is_empty() ? "_" : token.id; }

std::string render_marking(const Marking& marking) {
  std::string out = "(";
  for (std::size_t p = 0; p < marking.size(); ++p) {
    if (p) out += ',';
    out += render_token(marking[p]);
  }
  out += ')';
  return out;
}

namespace {

bool graph_bindings_equal(const std::vector<GraphBinding>& a, const std::vector<GraphBinding>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].alias != b[k].alias || a[k].source != b[k].source) return false;
    if (!a[k].graph || !b[k].graph) {
      if (a[k].graph != b[k].graph) return false;
      continue;
    }
    if (!(*a[k].graph == *b[k].graph)) return false;
  }
  return true;
}

bool places_equal(const std::vector<PlaceDecl>& a, const std::vector<PlaceDecl>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
    return x.id == y.id && x.graph_alias == y.graph_alias;
  });
}

Marking effective_initial(const Pnog& net) {
  if (net.initial_marking.empty()) return Marking(net.places.size(), Token::empty(net.kind));
  return net.initial_marking;
}

}  // namespace

bool net_equal(const Pnog& a, const Pnog& b) {
  auto in_equal = [](const InputArc& x, const InputArc& y) {
    return x.place == y.place && x.transition == y.transition && x.formula == y.formula;
  };
  auto out_equal = [](const OutputArc& x, const OutputArc& y) {
    return x.transition == y.transition && x.place == y.place && x.term == y.term;
  };
  return a.name == b.name && a.kind == b.kind && graph_bindings_equal(a.graphs, b.graphs) &&
         places_equal(a.places, b.places) && a.transitions == b.transitions &&
         std::equal(a.input_arcs.begin(), a.input_arcs.end(), b.input_arcs.begin(),
                    b.input_arcs.end(), in_equal) &&
         std::equal(a.output_arcs.begin(), a.output_arcs.end(), b.output_arcs.begin(),
                    b.output_arcs.end(), out_equal) &&
         effective_initial(a) == effective_initial(b);
}

std::string describe(const Violation& v) {
  std::string where;
  switch (v.site) {
    case Violation::Site::Net: where = "net"; break;
    case Violation::Site::Graph: where = "ontology " + v.alias; break;
    case Violation::Site::Place: where = "place " + v.place; break;
    case Violation::Site::Transition: where = "transition " + v.transition; break;
    case Violation::Site::InputArc: where = "in (" + v.place + "," + v.transition + ")"; break;
    case Violation::Site::OutputArc: where = "out (" + v.transition + "," + v.place + ")"; break;
    case Violation::Site::InitialMarking: where = "m0 " + v.place; break;
  }
  return where + ": " + v.message;
}

ValidationReport validate_net(const Pnog& net, ValidationMode mode) {
  ValidationReport report;
  auto add = [&](Violation v) { report.push_back(std::move(v)); };

  std::map<std::string, const OntologicalGraph*, std::less<>> graphs;
  for (const auto& binding : net.graphs) {
    if (!binding.graph)
      add({Violation::Site::Graph, {}, {}, binding.alias, "no ontology loaded for alias"});
    else if (!graphs.emplace(binding.alias, binding.graph.get()).second)
      add({Violation::Site::Graph, {}, {}, binding.alias, "alias bound twice"});
  }

  std::map<std::string, const OntologicalGraph*, std::less<>> place_graph;
  for (const auto& place : net.places) {
    if (!is_identifier(place.id)) {
      add({Violation::Site::Place, place.id, {}, {}, "place id is not an identifier"});
      continue;
    }
    auto g = graphs.find(place.graph_alias);
    if (g == graphs.end()) {
      add({Violation::Site::Place, place.id, {}, place.graph_alias,
           "ontology alias '" + place.graph_alias + "' is not bound"});
    }
    if (!place_graph.emplace(place.id, g == graphs.end() ? nullptr : g->second).second)
      add({Violation::Site::Place, place.id, {}, {}, "place declared twice"});
  }

  std::set<std::string, std::less<>> transitions;
  for (const auto& t : net.transitions) {
    if (!is_identifier(t))
      add({Violation::Site::Transition, {}, t, {}, "transition id is not an identifier"});
    else if (!transitions.insert(t).second)
      add({Violation::Site::Transition, {}, t, {}, "transition declared twice"});
  }

  auto endpoints_ok = [&](Violation::Site site, const std::string& place,
                          const std::string& transition) -> const OntologicalGraph* {
    bool ok = true;
    if (!transitions.contains(transition)) {
      add({site, place, transition, {}, "unknown transition '" + transition + "'"});
      ok = false;
    }
    auto p = place_graph.find(place);
    if (p == place_graph.end()) {
      add({site, place, transition, {}, "unknown place '" + place + "'"});
      return nullptr;
    }
    return ok ? p->second : nullptr;
  };

  std::set<std::pair<std::string, std::string>> seen_in;
  for (const auto& arc : net.input_arcs) {
    const auto site = Violation::Site::InputArc;
    if (!seen_in.emplace(arc.place, arc.transition).second) {
      add({site, arc.place, arc.transition, {}, "input arc declared twice"});
      continue;
    }
    const OntologicalGraph* g = endpoints_ok(site, arc.place, arc.transition);
    if (!g) continue;
    if (!g->has_concept(arc.formula.concept_id)) {
      add({site, arc.place, arc.transition, {},
           "formula " + format_formula(arc.formula) + " references unknown concept '" +
               arc.formula.concept_id + "' in ontology " + g->name()});
    } else if (arc.formula.concept_id == kBot) {
      add({site, arc.place, arc.transition, {}, "input formula must not reference BOT"});
    }
    if (mode == ValidationMode::Strict && net.kind == NetKind::IMPNOG &&
        arc.formula.form != Formula::Form::Bare)
      add({site, arc.place, arc.transition, {},
           "strict mode: IMPNOG input formula must be a bare concept, found " +
               format_formula(arc.formula)});
  }

  std::set<std::pair<std::string, std::string>> seen_out;
  for (const auto& arc : net.output_arcs) {
    const auto site = Violation::Site::OutputArc;
    if (!seen_out.emplace(arc.transition, arc.place).second) {
      add({site, arc.place, arc.transition, {}, "output arc declared twice"});
      continue;
    }
    const OntologicalGraph* g = endpoints_ok(site, arc.place, arc.transition);
    if (!g) continue;
    if (net.kind == NetKind::CMPNOG) {
      if (arc.term == kBot)
        add({site, arc.place, arc.transition, {}, "output term must not be BOT"});
      else if (!g->has_concept(arc.term))
        add({site, arc.place, arc.transition, {},
             "output term must be a concept; '" + arc.term + "' is not a concept of ontology " +
                 g->name()});
    } else {
      if (arc.term == kEps)
        add({site, arc.place, arc.transition, {}, "output term must not be EPS"});
      else if (!g->has_instance(arc.term))
        add({site, arc.place, arc.transition, {},
             "output term must be an instance; '" + arc.term +
                 "' is not an instance of ontology " + g->name()});
    }
  }

  if (!net.initial_marking.empty() && net.initial_marking.size() != net.places.size()) {
    add({Violation::Site::Net, {}, {}, {},
         "initial marking has " + std::to_string(net.initial_marking.size()) +
             " tokens for " + std::to_string(net.places.size()) + " places"});
  } else {
    for (std::size_t p = 0; p < net.initial_marking.size(); ++p) {
      const Token& token = net.initial_marking[p];
      const std::string& place = net.places[p].id;
      auto pg = place_graph.find(place);
      const OntologicalGraph* g = pg == place_graph.end() ? nullptr : pg->second;
      const auto site = Violation::Site::InitialMarking;
      bool concept_kind = token.kind == Token::Kind::Concept || token.kind == Token::Kind::EmptyConcept;
      if (concept_kind != (net.kind == NetKind::CMPNOG)) {
        add({site, place, {}, {},
             net.kind == NetKind::CMPNOG ? "CMPNOG token must be a concept or BOT"
                                         : "IMPNOG token must be an instance or EPS"});
        continue;
      }
      if (token.is_empty() || !g) continue;
      if (token.kind == Token::Kind::Concept && (token.id == kBot || !g->has_concept(token.id)))
        add({site, place, {}, {},
             "token '" + token.id + "' is not a concept of ontology " + g->name()});
      if (token.kind == Token::Kind::Instance && (token.id == kEps || !g->has_instance(token.id)))
        add({site, place, {}, {},
             "token '" + token.id + "' is not an instance of ontology " + g->name()});
    }
  }
  return report;
}

std::string describe(const Blocker& blocker) {
  if (blocker.reason == Blocker::Reason::InputCondition)
    return "input condition failed at " + blocker.place;
  return "output place " + blocker.place + " is not empty";
}

BoundNet::BoundNet(Pnog net, ValidationMode mode) : net_(std::move(net)) {
  if (auto report = validate_net(net_, mode); !report.empty()) {
    std::string message = "net '" + net_.name + "' is not valid:";
    for (const auto& v : report) message += "\n  " + describe(v);
    throw Error(ErrorKind::InvalidNet, message);
  }

  std::map<std::string, std::shared_ptr<const OntologicalGraph>, std::less<>> graphs;
  for (const auto& binding : net_.graphs) graphs.emplace(binding.alias, binding.graph);
  for (std::size_t p = 0; p < net_.places.size(); ++p) {
    place_lookup_.emplace(net_.places[p].id, p);
    place_graphs_.push_back(graphs.at(net_.places[p].graph_alias));
  }
  for (std::size_t t = 0; t < net_.transitions.size(); ++t)
    transition_lookup_.emplace(net_.transitions[t], t);

  transitions_.resize(net_.transitions.size());
  for (const auto& arc : net_.input_arcs) {
    std::size_t p = place_lookup_.at(arc.place);
    std::size_t t = transition_lookup_.at(arc.transition);
    const OntologicalGraph& g = *place_graphs_[p];
    ConceptSet denotation = denote(arc.formula, g);
    BoundInput input{p, {}};
    if (net_.kind == NetKind::CMPNOG) {
      input.accepts.assign(g.concept_count(), false);
      for (const auto& c : denotation) input.accepts[*g.concept_index(c)] = true;
    } else {
      input.accepts.assign(g.instance_count(), false);
      for (std::size_t i = 0; i < g.instance_count(); ++i)
        for (const auto& c : denotation)
          if (g.is_member(i, *g.concept_index(c))) {
            input.accepts[i] = true;
            break;
          }
    }
    transitions_[t].inputs.push_back(std::move(input));
  }
  for (const auto& arc : net_.output_arcs) {
    std::size_t p = place_lookup_.at(arc.place);
    std::size_t t = transition_lookup_.at(arc.transition);
    Token token = net_.kind == NetKind::CMPNOG ? Token::concept_token(arc.term)
                                               : Token::instance_token(arc.term);
    transitions_[t].outputs.push_back({p, std::move(token)});
  }
  for (auto& bt : transitions_) {
    std::sort(bt.inputs.begin(), bt.inputs.end(),
              [](const auto& a, const auto& b) { return a.place < b.place; });
    std::sort(bt.outputs.begin(), bt.outputs.end(),
              [](const auto& a, const auto& b) { return a.place < b.place; });
    for (const auto& in : bt.inputs) bt.inputs_sorted.push_back(in.place);
    for (const auto& out : bt.outputs) bt.outputs_sorted.push_back(out.place);
  }
  initial_ = effective_initial(net_);
}

std::optional<std::size_t> BoundNet::place_index(std::string_view id) const {
  auto it = place_lookup_.find(id);
  if (it == place_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> BoundNet::transition_index(std::string_view id) const {
  auto it = transition_lookup_.find(id);
  if (it == transition_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t BoundNet::require_transition(std::string_view id) const {
  if (auto t = transition_index(id)) return *t;
  throw Error(ErrorKind::UnknownTransition,
              "net '" + net_.name + "' has no transition '" + std::string(id) + "'");
}

std::string BoundNet::check_marking(const Marking& marking) const {
  if (marking.size() != place_count())
    return "marking has " + std::to_string(marking.size()) + " tokens for " +
           std::to_string(place_count()) + " places";
  for (std::size_t p = 0; p < marking.size(); ++p) {
    const Token& token = marking[p];
    const OntologicalGraph& g = *place_graphs_[p];
    bool ok = false;
    if (net_.kind == NetKind::CMPNOG) {
      ok = token.kind == Token::Kind::EmptyConcept ||
           (token.kind == Token::Kind::Concept && token.id != kBot && g.has_concept(token.id));
    } else {
      ok = token.kind == Token::Kind::EmptyInstance ||
           (token.kind == Token::Kind::Instance && token.id != kEps && g.has_instance(token.id));
    }
    if (!ok) return "token '" + render_token(token) + "' is ill-typed at " + place_id(p);
  }
  return {};
}

bool BoundNet::accepts(const BoundInput& input, const Token& token) const {
  const OntologicalGraph& g = *place_graphs_[input.place];
  std::optional<std::size_t> index;
  if (net_.kind == NetKind::CMPNOG && token.kind == Token::Kind::Concept)
    index = g.concept_index(token.id);
  else if (net_.kind == NetKind::IMPNOG && token.kind == Token::Kind::Instance)
    index = g.instance_index(token.id);
  return index && input.accepts[*index];
}

std::optional<Blocker> BoundNet::blocker(const Marking& marking, std::size_t transition) const {
  const BoundTransition& bt = transitions_.at(transition);
  for (const auto& input : bt.inputs)
    if (!accepts(input, marking.at(input.place)))
      return Blocker{Blocker::Reason::InputCondition, place_id(input.place)};
  for (const auto& output : bt.outputs) {
    // Self-loop places are exempt: they are emptied and refilled by the firing.
    if (std::binary_search(bt.inputs_sorted.begin(), bt.inputs_sorted.end(), output.place))
      continue;
    if (!marking.at(output.place).is_empty())
      return Blocker{Blocker::Reason::OutputNotEmpty, place_id(output.place)};
  }
  return std::nullopt;
}

Marking BoundNet::fire(const Marking& marking, std::size_t transition) const {
  if (auto b = blocker(marking, transition))
    throw Error(ErrorKind::NotEnabled,
                "transition " + transition_id(transition) + " is not enabled: " + describe(*b));
  Marking next = marking;
  const BoundTransition& bt = transitions_[transition];
  for (const auto& input : bt.inputs) next[input.place] = empty_token();
  for (const auto& output : bt.outputs) next[output.place] = output.token;
  return next;
}

bool enabled(const BoundNet& net, const Marking& marking, std::string_view transition) {
  return net.enabled(marking, net.require_transition(transition));
}

std::vector<std::string> enabled_transitions(const BoundNet& net, const Marking& marking) {
  std::vector<std::string> out;
  for (std::size_t t = 0; t < net.transition_count(); ++t)
    if (net.enabled(marking, t)) out.push_back(net.transition_id(t));
  return out;
}

Marking fire(const BoundNet& net, const Marking& marking, std::string_view transition) {
  return net.fire(marking, net.require_transition(transition));
}

std::size_t SeededChooser::pick(std::size_t bound) {
  if (bound == 0) throw Error(ErrorKind::InvalidArgument, "cannot pick from an empty range");
  const std::uint64_t n = bound;
  // 2^64 mod n; rejecting draws below it leaves a multiple of n outcomes.
  const std::uint64_t threshold = (0 - n) % n;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw < threshold);
  return static_cast<std::size_t>(draw % n);
}

std::vector<TraceStep> run_trace(const BoundNet& net, const TracePolicy& policy,
                                 std::size_t max_steps,
                                 const std::function<void(const TraceStep&)>& on_step) {
  std::vector<TraceStep> trace;
  Marking current = net.initial_marking();
  auto record = [&](std::size_t t) {
    TraceStep step{net.transition_id(t), current, net.fire(current, t)};
    current = step.after;
    if (on_step) on_step(step);
    trace.push_back(std::move(step));
  };

  if (const auto* script = std::get_if<ScriptPolicy>(&policy)) {
    for (std::size_t k = 0; k < script->transitions.size() && trace.size() < max_steps; ++k) {
      std::size_t t = net.require_transition(script->transitions[k]);
      if (auto b = net.blocker(current, t))
        throw Error(ErrorKind::ScriptStepNotEnabled,
                    "script step " + std::to_string(k + 1) + " (" + script->transitions[k] +
                        ") is not enabled: " + describe(*b));
      record(t);
    }
    return trace;
  }

  std::optional<SeededChooser> chooser;
  if (const auto* random = std::get_if<RandomPolicy>(&policy)) chooser.emplace(random->seed);
  while (trace.size() < max_steps) {
    std::vector<std::size_t> candidates;
    for (std::size_t t = 0; t < net.transition_count(); ++t)
      if (net.enabled(current, t)) candidates.push_back(t);
    if (candidates.empty()) break;
    record(chooser ? candidates[chooser->pick(candidates.size())] : candidates.front());
  }
  return trace;
}

}  // namespace pnog
