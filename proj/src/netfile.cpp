#include "pnog/netfile.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "text_util.hpp"

namespace pnog {

std::string describe(const LocatedViolation& located) {
  return "line " + std::to_string(located.line) + ": " + describe(located.violation);
}

namespace {

std::string summarize(const std::vector<LocatedViolation>& violations) {
  std::string out = std::to_string(violations.size()) + " violation(s)";
  for (const auto& v : violations) out += "\n  " + describe(v);
  return out;
}

[[noreturn]] void syntax(std::size_t line, const std::string& message) {
  throw Error(ErrorKind::SyntaxError, message, line);
}

void require_arity(const detail::Line& line, std::size_t count, std::string_view usage) {
  if (line.tokens.size() != count) syntax(line.number, "expected `" + std::string(usage) + "`");
}

const std::string& ident(const detail::Line& line, std::size_t index, std::string_view role) {
  if (!is_identifier(line.tokens[index]))
    syntax(line.number, "expected " + std::string(role) + " identifier, found '" +
                            line.tokens[index] + "'");
  return line.tokens[index];
}

std::string key_value(const detail::Line& line, std::size_t index, std::string_view key) {
  std::string_view token = line.tokens[index];
  std::string prefix = std::string(key) + "=";
  if (!token.starts_with(prefix))
    syntax(line.number, "expected `" + prefix + "<value>`, found '" + std::string(token) + "'");
  return std::string(token.substr(prefix.size()));
}

std::string quoted(const detail::Line& line, std::size_t index, std::string_view role) {
  if (!detail::is_quoted(line.tokens[index]))
    syntax(line.number, "expected quoted " + std::string(role) + ", found '" +
                            line.tokens[index] + "'");
  return detail::unquote(line.tokens[index]);
}

std::string quote_path_if_needed(const std::string& path) {
  bool plain = !path.empty() && std::none_of(path.begin(), path.end(), [](char ch) {
    return std::isspace(static_cast<unsigned char>(ch)) || ch == '#';
  });
  return plain ? path : '"' + path + '"';
}

}  // namespace

NetValidationError::NetValidationError(std::vector<LocatedViolation> violations)
    : Error(ErrorKind::ValidationFailure, summarize(violations),
            violations.empty() ? 0 : violations.front().line),
      violations_(std::move(violations)) {}

Pnog parse_netfile(std::string_view text, const GraphLoader& loader, ValidationMode mode) {
  auto lines = detail::split_lines(text);
  if (lines.empty()) syntax(1, "expected `net <name> kind=<CMPNOG|IMPNOG>` header");

  Pnog net;
  const auto& header = lines.front();
  if (header.tokens[0] != "net" || header.tokens.size() != 3)
    syntax(header.number, "expected `net <name> kind=<CMPNOG|IMPNOG>` header");
  net.name = ident(header, 1, "net name");
  std::string kind_text = key_value(header, 2, "kind");
  auto kind = parse_net_kind(kind_text);
  if (!kind) syntax(header.number, "unknown net kind '" + kind_text + "'");
  net.kind = *kind;

  // Source lines for mapping validation findings back to the file.
  std::map<std::string, std::size_t> alias_line, place_line, transition_line, m0_line;
  std::map<std::pair<std::string, std::string>, std::size_t> in_line, out_line;
  struct PendingUse {
    std::string path, alias;
    std::size_t line;
  };
  std::vector<PendingUse> uses;
  std::vector<std::pair<PlaceDecl, std::size_t>> places;
  std::vector<std::pair<std::string, std::pair<std::string, std::size_t>>> m0;

  for (auto it = lines.begin() + 1; it != lines.end(); ++it) {
    const auto& line = *it;
    const std::string& keyword = line.tokens[0];
    if (keyword == "use") {
      require_arity(line, 4, "use <graphfile> as <alias>");
      if (line.tokens[2] != "as") syntax(line.number, "expected `as` in use line");
      std::string path = detail::is_quoted(line.tokens[1]) ? detail::unquote(line.tokens[1])
                                                           : line.tokens[1];
      if (path.empty()) syntax(line.number, "empty graph file path");
      const std::string& alias = ident(line, 3, "alias");
      if (!alias_line.emplace(alias, line.number).second)
        syntax(line.number, "alias '" + alias + "' bound twice");
      uses.push_back({path, alias, line.number});
    } else if (keyword == "place") {
      require_arity(line, 3, "place <id> ontology=<alias>");
      PlaceDecl decl{ident(line, 1, "place"), key_value(line, 2, "ontology")};
      place_line.emplace(decl.id, line.number);
      places.emplace_back(std::move(decl), line.number);
    } else if (keyword == "transition") {
      require_arity(line, 2, "transition <id>");
      net.transitions.push_back(ident(line, 1, "transition"));
      transition_line.emplace(net.transitions.back(), line.number);
    } else if (keyword == "in") {
      require_arity(line, 4, "in <place> <transition> \"<formula>\"");
      InputArc arc{ident(line, 1, "place"), ident(line, 2, "transition"), {}};
      try {
        arc.formula = parse_formula(quoted(line, 3, "formula"));
      } catch (const Error& e) {
        if (e.line() != 0) throw;
        throw Error(e.kind(), "in formula: " + e.detail(), line.number, e.column());
      }
      in_line[{arc.place, arc.transition}] = line.number;
      net.input_arcs.push_back(std::move(arc));
    } else if (keyword == "out") {
      require_arity(line, 4, "out <transition> <place> \"<term>\"");
      OutputArc arc{ident(line, 1, "transition"), ident(line, 2, "place"),
                    quoted(line, 3, "term")};
      if (!is_identifier(arc.term))
        syntax(line.number, "output term '" + arc.term + "' is not an identifier");
      out_line[{arc.transition, arc.place}] = line.number;
      net.output_arcs.push_back(std::move(arc));
    } else if (keyword == "m0") {
      require_arity(line, 3, "m0 <place> <token-id>");
      const std::string& place = ident(line, 1, "place");
      std::string token = detail::is_quoted(line.tokens[2]) ? detail::unquote(line.tokens[2])
                                                            : line.tokens[2];
      if (token != "_" && !is_identifier(token))
        syntax(line.number, "expected token identifier, found '" + token + "'");
      if (!m0_line.emplace(place, line.number).second)
        syntax(line.number, "m0 mentions place '" + place + "' twice");
      m0.emplace_back(place, std::make_pair(token, line.number));
    } else {
      syntax(line.number, "expected one of use, place, transition, in, out, m0; found '" +
                              keyword + "'");
    }
  }

  for (const auto& use : uses) {
    std::shared_ptr<const OntologicalGraph> graph;
    try {
      graph = loader(use.path);
    } catch (const std::exception& e) {
      throw Error(ErrorKind::GraphLoadFailure,
                  "cannot load '" + use.path + "' as " + use.alias + ": " + e.what(), use.line);
    }
    if (!graph)
      throw Error(ErrorKind::GraphLoadFailure, "cannot load '" + use.path + "'", use.line);
    net.graphs.push_back({use.alias, use.path, std::move(graph)});
  }
  for (auto& [decl, number] : places) {
    if (!alias_line.contains(decl.graph_alias))
      throw Error(ErrorKind::UnknownAlias,
                  "place " + decl.id + " uses unbound ontology alias '" + decl.graph_alias + "'",
                  number);
    net.places.push_back(std::move(decl));
  }

  if (!m0.empty()) {
    net.initial_marking.assign(net.places.size(), Token::empty(net.kind));
    for (const auto& [place, entry] : m0) {
      const auto& [token, number] = entry;
      auto pos = std::find_if(net.places.begin(), net.places.end(),
                              [&](const PlaceDecl& d) { return d.id == place; });
      if (pos == net.places.end()) syntax(number, "m0 references undeclared place '" + place + "'");
      bool empty = token == "_" || token == (net.kind == NetKind::CMPNOG ? kBot : kEps);
      Token value = empty ? Token::empty(net.kind)
                          : net.kind == NetKind::CMPNOG ? Token::concept_token(token)
                                                        : Token::instance_token(token);
      net.initial_marking[static_cast<std::size_t>(pos - net.places.begin())] = std::move(value);
    }
  }

  if (auto report = validate_net(net, mode); !report.empty()) {
    auto line_of = [&](const Violation& v) -> std::size_t {
      auto find = [](const auto& map, const auto& key) -> std::size_t {
        auto it = map.find(key);
        return it == map.end() ? 0 : it->second;
      };
      std::size_t found = 0;
      switch (v.site) {
        case Violation::Site::Net: found = header.number; break;
        case Violation::Site::Graph: found = find(alias_line, v.alias); break;
        case Violation::Site::Place: found = find(place_line, v.place); break;
        case Violation::Site::Transition: found = find(transition_line, v.transition); break;
        case Violation::Site::InputArc: found = find(in_line, std::make_pair(v.place, v.transition)); break;
        case Violation::Site::OutputArc: found = find(out_line, std::make_pair(v.transition, v.place)); break;
        case Violation::Site::InitialMarking: found = find(m0_line, v.place); break;
      }
      return found ? found : header.number;
    };
    std::vector<LocatedViolation> located;
    for (auto& v : report) {
      std::size_t number = line_of(v);
      located.push_back({std::move(v), number});
    }
    throw NetValidationError(std::move(located));
  }
  return net;
}

std::string serialize_netfile(const Pnog& net) {
  std::ostringstream out;
  out << "net " << net.name << " kind=" << to_string(net.kind) << '\n';
  for (const auto& binding : net.graphs)
    out << "use " << quote_path_if_needed(binding.source) << " as " << binding.alias << '\n';
  for (const auto& place : net.places)
    out << "place " << place.id << " ontology=" << place.graph_alias << '\n';
  for (const auto& t : net.transitions) out << "transition " << t << '\n';
  for (const auto& arc : net.input_arcs)
    out << "in " << arc.place << ' ' << arc.transition << " \"" << format_formula(arc.formula)
        << "\"\n";
  for (const auto& arc : net.output_arcs)
    out << "out " << arc.transition << ' ' << arc.place << " \"" << arc.term << "\"\n";
  for (std::size_t p = 0; p < net.initial_marking.size() && p < net.places.size(); ++p)
    if (!net.initial_marking[p].is_empty())
      out << "m0 " << net.places[p].id << ' ' << net.initial_marking[p].id << '\n';
  return out.str();
}

}  // namespace pnog
