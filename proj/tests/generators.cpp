#include "generators.hpp"

#include <algorithm>
#include <set>

namespace pnog::gen {

namespace {

std::size_t below(Rng& rng, std::size_t bound) {
  return bound == 0 ? 0 : std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::vector<std::string> distinct_ids(Rng& rng, std::size_t count) {
  std::set<std::string> seen;
  std::vector<std::string> out;
  while (out.size() < count) {
    std::string id = identifier(rng, 6);
    if (is_reserved_id(id) || !seen.insert(id).second) continue;
    out.push_back(id);
  }
  return out;
}

}  // namespace

std::string identifier(Rng& rng, std::size_t max_tail) {
  static constexpr std::string_view kLetters = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  static constexpr std::string_view kTail =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_";
  std::string out(1, kLetters[below(rng, kLetters.size())]);
  std::size_t tail = below(rng, max_tail + 1);
  for (std::size_t k = 0; k < tail; ++k) out += kTail[below(rng, kTail.size())];
  return out;
}

GraphDecls graph_decls(Rng& rng, const GraphParams& params) {
  GraphDecls decls;
  std::size_t n = below(rng, params.max_concepts + 1);
  std::size_t m = below(rng, params.max_instances + 1);
  std::vector<std::string> concepts = distinct_ids(rng, n + m);
  std::vector<std::string> instances(concepts.begin() + static_cast<std::ptrdiff_t>(n), concepts.end());
  concepts.resize(n);
  // concepts[k] may only subclass concepts[j] with j < k, so the order is a
  // topological order; ids are random so it is unrelated to sorted order.
  for (const auto& c : concepts) decls.concepts.push_back({c, 0});

  for (const auto& i : instances) decls.instances.push_back({i, 0});

  std::size_t edges = below(rng, params.max_edges + 1);
  for (std::size_t k = 0; k < edges; ++k) {
    std::size_t kind = below(rng, params.free_relations ? 4 : 3);
    if (kind == 0 && n >= 2) {
      std::size_t a = below(rng, n), b = below(rng, n);
      if (a == b) continue;
      if (a < b) std::swap(a, b);
      decls.edges.push_back({subclass_edge(concepts[a], chance(rng, 0.05) ? "TOP" : concepts[b]), 0});
    } else if (kind == 1 && n >= 2 && chance(rng, 0.35)) {
      std::size_t a = below(rng, n), b = below(rng, n);
      if (a != b) decls.edges.push_back({equiv_edge(concepts[a], concepts[b]), 0});
    } else if (kind == 2 && m >= 1) {
      std::string target = n == 0 || chance(rng, 0.05) ? "TOP" : concepts[below(rng, n)];
      decls.edges.push_back({instance_edge(instances[below(rng, m)], target), 0});
    } else if (kind == 3 && n >= 1) {
      std::string label = chance(rng, 0.5) ? "part_of" : "is located in";
      if (chance(rng, 0.3)) label = identifier(rng, 4);
      bool from_instance = m > 0 && chance(rng, 0.5);
      std::string source = from_instance ? instances[below(rng, m)] : concepts[below(rng, n)];
      decls.edges.push_back({other_edge(label, source, concepts[below(rng, n)]), 0});
    }
  }
  return decls;
}

OntologicalGraph graph(Rng& rng, const GraphParams& params, const std::string& name) {
  return build_graph(name, graph_decls(rng, params));
}

Formula formula(Rng& rng) {
  return {static_cast<Formula::Form>(below(rng, 4)), identifier(rng)};
}

Pnog net(Rng& rng, const NetParams& params) {
  Pnog out;
  out.name = identifier(rng, 5);
  out.kind = chance(rng, 0.5) ? NetKind::CMPNOG : NetKind::IMPNOG;

  std::size_t graph_count = 1 + below(rng, 2);
  GraphParams gp{params.max_concepts, 3 * params.max_concepts, params.max_instances, true};
  for (std::size_t k = 0; k < graph_count; ++k) {
    std::string alias = "g" + std::to_string(k);
    auto g = std::make_shared<const OntologicalGraph>(graph(rng, gp, alias));
    out.graphs.push_back({alias, alias + ".og", std::move(g)});
  }

  std::size_t places = below(rng, params.max_places + 1);
  for (std::size_t p = 0; p < places; ++p)
    out.places.push_back({"pl" + std::to_string(p + 1), out.graphs[below(rng, graph_count)].alias});
  std::size_t transitions = below(rng, params.max_transitions + 1);
  for (std::size_t t = 0; t < transitions; ++t) out.transitions.push_back("tr" + std::to_string(t + 1));

  auto graph_for = [&](const PlaceDecl& place) -> const OntologicalGraph& {
    for (const auto& b : out.graphs)
      if (b.alias == place.graph_alias) return *b.graph;
    throw std::logic_error("unbound alias");
  };
  auto concept_choices = [](const OntologicalGraph& g) {
    std::vector<std::string> out(g.declared_concepts());
    out.push_back("TOP");
    return out;
  };

  for (const auto& place : out.places) {
    const OntologicalGraph& g = graph_for(place);
    auto concepts = concept_choices(g);
    for (const auto& t : out.transitions) {
      if (chance(rng, 0.4)) {
        Formula f{static_cast<Formula::Form>(below(rng, 4)), concepts[below(rng, concepts.size())]};
        out.input_arcs.push_back({place.id, t, f});
      }
      if (chance(rng, 0.4)) {
        if (out.kind == NetKind::CMPNOG) {
          out.output_arcs.push_back({t, place.id, concepts[below(rng, concepts.size())]});
        } else if (!g.declared_instances().empty()) {
          const auto& inst = g.declared_instances();
          out.output_arcs.push_back({t, place.id, inst[below(rng, inst.size())]});
        }
      }
    }
  }
  std::shuffle(out.input_arcs.begin(), out.input_arcs.end(), rng);
  std::shuffle(out.output_arcs.begin(), out.output_arcs.end(), rng);
  out.initial_marking = marking(rng, out);
  return out;
}

Marking marking(Rng& rng, const Pnog& net) {
  Marking out;
  for (const auto& place : net.places) {
    const OntologicalGraph* g = nullptr;
    for (const auto& b : net.graphs)
      if (b.alias == place.graph_alias) g = b.graph.get();
    if (chance(rng, 0.3)) {
      out.push_back(Token::empty(net.kind));
    } else if (net.kind == NetKind::CMPNOG) {
      std::vector<std::string> concepts(g->declared_concepts());
      concepts.push_back("TOP");
      out.push_back(Token::concept_token(concepts[below(rng, concepts.size())]));
    } else if (!g->declared_instances().empty()) {
      const auto& inst = g->declared_instances();
      out.push_back(Token::instance_token(inst[below(rng, inst.size())]));
    } else {
      out.push_back(Token::empty(net.kind));
    }
  }
  return out;
}

}  // namespace pnog::gen
