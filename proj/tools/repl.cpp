#include <charconv>
#include <iostream>
#include <sstream>

#include "cli.hpp"

namespace pnog::cli {

namespace {

std::vector<std::size_t> enabled_indices(const BoundNet& net, const Marking& marking) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < net.transition_count(); ++t)
    if (net.enabled(marking, t)) out.push_back(t);
  return out;
}

void print_state(const BoundNet& net, const Marking& marking, std::ostream& out) {
  out << "marking: " << render_marking(marking) << '\n';
  auto enabled = enabled_indices(net, marking);
  if (enabled.empty()) {
    out << "enabled: none (deadlock)\n";
    return;
  }
  out << "enabled:";
  for (std::size_t k = 0; k < enabled.size(); ++k)
    out << (k ? "  " : " ") << k + 1 << ": " << net.transition_id(enabled[k]);
  out << '\n';
}

std::string join(const ConceptSet& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ", ";
    out += item;
  }
  return out.empty() ? "-" : out;
}

void show_place(const BoundNet& net, const Marking& marking, std::size_t p, std::ostream& out) {
  const Token& token = marking[p];
  const OntologicalGraph& g = net.place_graph(p);
  out << net.place_id(p) << " = " << render_token(token) << " [ontology " << g.name() << "]";
  if (token.is_empty()) {
    out << " empty\n";
  } else if (token.kind == Token::Kind::Instance) {
    out << " instance of: " << join(g.concepts_of(token.id)) << '\n';
  } else {
    ConceptSet equivalents = g.equiv_class(token.id);
    equivalents.erase(token.id);
    out << " superclasses: " << join(g.ancestors(token.id))
        << "; equivalents: " << join(equivalents) << '\n';
  }
}

const char* kHelp =
    "commands: fire <n|transition>, undo, reset, show <place>, help, quit\n";

}  // namespace

void run_repl(const BoundNet& net, std::istream& in, std::ostream& out) {
  Marking current = net.initial_marking();
  std::vector<Marking> history;
  print_state(net, current, out);

  std::string line;
  while (out << "> " << std::flush, std::getline(in, line)) {
    std::istringstream words(line);
    std::string command, arg, extra;
    words >> command >> arg >> extra;
    if (command.empty()) continue;

    if (command == "quit" || command == "exit") {
      break;
    } else if (command == "help") {
      out << kHelp;
    } else if (command == "fire") {
      if (arg.empty() || !extra.empty()) {
        out << "usage: fire <n|transition>\n";
        continue;
      }
      auto enabled = enabled_indices(net, current);
      std::size_t t = 0;
      std::size_t number = 0;
      auto [end, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), number);
      if (ec == std::errc() && end == arg.data() + arg.size()) {
        if (number == 0 || number > enabled.size()) {
          out << "no enabled transition numbered " << arg << '\n';
          continue;
        }
        t = enabled[number - 1];
      } else if (auto index = net.transition_index(arg)) {
        t = *index;
      } else {
        out << "unknown transition '" << arg << "'\n";
        continue;
      }
      if (auto b = net.blocker(current, t)) {
        out << "not enabled: " << describe(*b) << '\n';
        continue;
      }
      history.push_back(current);
      current = net.fire(current, t);
      out << "fired " << net.transition_id(t) << '\n';
      print_state(net, current, out);
    } else if (command == "undo") {
      if (history.empty()) {
        out << "nothing to undo\n";
        continue;
      }
      current = std::move(history.back());
      history.pop_back();
      print_state(net, current, out);
    } else if (command == "reset") {
      history.push_back(current);
      current = net.initial_marking();
      print_state(net, current, out);
    } else if (command == "show") {
      auto p = net.place_index(arg);
      if (!p) {
        out << "unknown place '" << arg << "'\n";
        continue;
      }
      show_place(net, current, *p, out);
    } else {
      out << "unknown command '" << command << "'; " << kHelp;
    }
  }
}

}  // namespace pnog::cli
