#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <tuple>

#include "pnog/error.hpp"
#include "pnog/ontoio.hpp"
#include "text_util.hpp"

namespace pnog {

namespace {

void require_ident(const detail::Line& line, std::size_t index, std::string_view role) {
  if (!is_identifier(line.tokens[index]))
    throw Error(ErrorKind::SyntaxError,
                "expected " + std::string(role) + " identifier, found '" + line.tokens[index] + "'",
                line.number);
}

void require_arity(const detail::Line& line, std::size_t min, std::size_t max,
                   std::string_view usage) {
  if (line.tokens.size() < min || line.tokens.size() > max)
    throw Error(ErrorKind::SyntaxError, "expected `" + std::string(usage) + "`", line.number);
}

std::string quote_label(const std::string& label) {
  bool plain = std::none_of(label.begin(), label.end(), [](char ch) {
    return std::isspace(static_cast<unsigned char>(ch)) || ch == '#';
  });
  return plain ? label : '"' + label + '"';
}

}  // namespace

OntologicalGraph parse_native_graph(std::string_view text, MembershipMode mode) {
  auto lines = detail::split_lines(text);
  if (lines.empty())
    throw Error(ErrorKind::SyntaxError, "expected `ontology <name>` header", 1);

  const auto& header = lines.front();
  if (header.tokens[0] != "ontology" || header.tokens.size() != 2)
    throw Error(ErrorKind::SyntaxError, "expected `ontology <name>` header", header.number);
  require_ident(header, 1, "ontology name");

  GraphDecls decls;
  std::set<std::string, std::less<>> instances_seen;
  for (auto it = lines.begin() + 1; it != lines.end(); ++it) {
    const auto& line = *it;
    const std::string& keyword = line.tokens[0];
    if (keyword == "concept") {
      require_arity(line, 2, 2, "concept <id>");
      require_ident(line, 1, "concept");
      decls.concepts.push_back({line.tokens[1], line.number});
    } else if (keyword == "instance") {
      require_arity(line, 2, 3, "instance <id> [<conceptId>]");
      require_ident(line, 1, "instance");
      if (instances_seen.insert(line.tokens[1]).second)
        decls.instances.push_back({line.tokens[1], line.number});
      if (line.tokens.size() == 3) {
        require_ident(line, 2, "concept");
        decls.edges.push_back({instance_edge(line.tokens[1], line.tokens[2]), line.number});
      }
    } else if (keyword == "subclass") {
      require_arity(line, 3, 3, "subclass <id> <id>");
      require_ident(line, 1, "concept");
      require_ident(line, 2, "concept");
      decls.edges.push_back({subclass_edge(line.tokens[1], line.tokens[2]), line.number});
    } else if (keyword == "equiv") {
      require_arity(line, 3, 3, "equiv <id> <id>");
      require_ident(line, 1, "concept");
      require_ident(line, 2, "concept");
      decls.edges.push_back({equiv_edge(line.tokens[1], line.tokens[2]), line.number});
    } else if (keyword == "relation") {
      require_arity(line, 4, 4, "relation <label> <id> <id>");
      require_ident(line, 2, "source");
      require_ident(line, 3, "target");
      std::string label = detail::is_quoted(line.tokens[1]) ? detail::unquote(line.tokens[1])
                                                            : line.tokens[1];
      decls.edges.push_back({other_edge(std::move(label), line.tokens[2], line.tokens[3]),
                             line.number});
    } else {
      throw Error(ErrorKind::SyntaxError,
                  "expected one of concept, instance, subclass, equiv, relation; found '" +
                      keyword + "'",
                  line.number);
    }
  }
  return build_graph(header.tokens[1], decls, mode);
}

std::string serialize_native_graph(const OntologicalGraph& graph) {
  std::ostringstream out;
  out << "ontology " << graph.name() << '\n';
  for (const auto& c : graph.declared_concepts()) out << "concept " << c << '\n';

  std::set<std::pair<std::string, std::string>> memberships;
  for (const auto& edge : graph.edges())
    if (edge.kind == EdgeKind::InstanceOf) memberships.emplace(edge.source, edge.target);
  for (const auto& i : graph.declared_instances()) {
    auto first = memberships.lower_bound({i, std::string()});
    if (first == memberships.end() || first->first != i) {
      out << "instance " << i << '\n';
      continue;
    }
    for (auto it = first; it != memberships.end() && it->first == i; ++it)
      out << "instance " << i << ' ' << it->second << '\n';
  }

  for (const auto& edge : graph.edges())
    if (edge.kind == EdgeKind::SubclassOf)
      out << "subclass " << edge.source << ' ' << edge.target << '\n';
  for (const auto& edge : graph.edges())
    if (edge.kind == EdgeKind::EquivTo)
      out << "equiv " << edge.source << ' ' << edge.target << '\n';

  std::vector<std::tuple<std::string, std::string, std::string>> relations;
  for (const auto& edge : graph.edges())
    if (edge.kind == EdgeKind::Other) relations.emplace_back(edge.label, edge.source, edge.target);
  std::sort(relations.begin(), relations.end());
  for (const auto& [label, source, target] : relations)
    out << "relation " << quote_label(label) << ' ' << source << ' ' << target << '\n';
  return out.str();
}

}  // namespace pnog
