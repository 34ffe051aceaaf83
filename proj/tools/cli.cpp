#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "pnog/analysis.hpp"
#include "pnog/error.hpp"
#include "pnog/netfile.hpp"
#include "pnog/ontoio.hpp"

namespace pnog::cli {

namespace fs = std::filesystem;

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buffer.str();
}

std::string location(const std::string& path, std::size_t line) {
  return line ? path + ":" + std::to_string(line) : path;
}

// Loads `.og` (native) or `.ofn` (OWL functional syntax) relative to the
// directory of the net file.
GraphLoader file_loader(const fs::path& base, std::ostream& err) {
  return [base, &err](const std::string& path) -> std::shared_ptr<const OntologicalGraph> {
    fs::path resolved = fs::path(path).is_absolute() ? fs::path(path) : base / path;
    auto text = read_file(resolved.string());
    if (!text) throw Error(ErrorKind::GraphLoadFailure, "cannot read " + resolved.string());
    if (resolved.extension() == ".ofn") {
      auto imported = import_owl_functional(*text);
      if (imported.skipped())
        err << "warning: " << path << ": skipped " << imported.skipped() << " axioms\n";
      return std::make_shared<const OntologicalGraph>(std::move(imported.graph));
    }
    return std::make_shared<const OntologicalGraph>(parse_native_graph(*text));
  };
}

struct Loaded {
  std::optional<BoundNet> net;
  int status = kExitOk;
};

// Parses and binds a net file. Violations go to `out`, other
// diagnostics to `err`.
Loaded load_net(const std::string& path, ValidationMode mode, std::ostream& out,
                std::ostream& err) {
  Loaded loaded;
  auto text = read_file(path);
  if (!text) {
    err << "error: cannot read " << path << '\n';
    loaded.status = kExitUsage;
    return loaded;
  }
  try {
    fs::path base = fs::path(path).parent_path();
    loaded.net.emplace(parse_netfile(*text, file_loader(base, err), mode), mode);
  } catch (const NetValidationError& e) {
    for (const auto& v : e.violations())
      out << location(path, v.line) << ": " << describe(v.violation) << '\n';
    loaded.status = kExitFailure;
  } catch (const Error& e) {
    err << location(path, e.line()) << ": " << to_string(e.kind()) << ": " << e.detail() << '\n';
    loaded.status = kExitUsage;
  }
  return loaded;
}

bool has_enabled(const BoundNet& net, const Marking& marking) {
  for (std::size_t t = 0; t < net.transition_count(); ++t)
    if (net.enabled(marking, t)) return true;
  return false;
}

std::vector<std::string> split_script(const std::string& script) {
  std::vector<std::string> out;
  std::stringstream in(script);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto first = item.find_first_not_of(" \t");
    auto last = item.find_last_not_of(" \t");
    if (first != std::string::npos) out.push_back(item.substr(first, last - first + 1));
  }
  return out;
}

int cmd_validate(const std::string& path, bool strict, std::ostream& out, std::ostream& err) {
  auto loaded = load_net(path, strict ? ValidationMode::Strict : ValidationMode::Default, out, err);
  if (!loaded.net) return loaded.status;
  out << "OK: " << loaded.net->place_count() << " places, " << loaded.net->transition_count()
      << " transitions\n";
  return kExitOk;
}

struct RunOptions {
  std::string path;
  std::string policy = "first";
  std::uint64_t seed = 0;
  std::size_t steps = 1000;
  std::string script;
};

int cmd_run(const RunOptions& opts, std::ostream& out, std::ostream& err) {
  TracePolicy policy;
  if (opts.policy == "first") {
    policy = FirstPolicy{};
  } else if (opts.policy == "random") {
    policy = RandomPolicy{opts.seed};
  } else if (opts.policy == "script") {
    policy = ScriptPolicy{split_script(opts.script)};
  } else {
    err << "error: unknown policy '" << opts.policy << "' (first|random|script)\n";
    return kExitUsage;
  }
  if (opts.policy != "script" && !opts.script.empty()) {
    err << "error: --script requires --policy script\n";
    return kExitUsage;
  }

  auto loaded = load_net(opts.path, ValidationMode::Default, out, err);
  if (!loaded.net) return loaded.status;
  const BoundNet& net = *loaded.net;

  std::size_t k = 0;
  Marking final_marking = net.initial_marking();
  try {
    run_trace(net, policy, opts.steps, [&](const TraceStep& step) {
      out << "step_" << ++k << ": fired=" << step.fired
          << " marking=" << render_marking(step.after) << '\n';
      final_marking = step.after;
    });
  } catch (const Error& e) {
    err << "error: " << e.detail() << '\n';
    return kExitFailure;
  }
  out << "final: " << render_marking(final_marking);
  if (!has_enabled(net, final_marking)) out << " deadlock";
  out << '\n';
  return kExitOk;
}

struct ReachOptions {
  std::string path;
  std::size_t max_states = 100000;
  std::string dot;
  bool deadlocks = false;
};

int cmd_reach(const ReachOptions& opts, std::ostream& out, std::ostream& err) {
  auto loaded = load_net(opts.path, ValidationMode::Default, out, err);
  if (!loaded.net) return loaded.status;
  if (opts.max_states == 0) {
    err << "error: --max-states must be at least 1\n";
    return kExitUsage;
  }
  const BoundNet& net = *loaded.net;
  OccurrenceGraph og = build_occurrence_graph(net, opts.max_states);
  out << "states=" << og.nodes.size() << " edges=" << og.edges.size()
      << " truncated=" << (og.truncated ? "true" : "false") << '\n';

  if (!opts.dot.empty()) {
    std::ofstream file(opts.dot, std::ios::binary);
    file << export_dot(og);
    if (!file) {
      err << "error: cannot write " << opts.dot << '\n';
      return kExitUsage;
    }
  }
  if (opts.deadlocks) {
    auto found = find_deadlocks(og, net);
    out << "deadlocks=" << found.size() << '\n';
    for (const auto& m : found) out << "deadlock: " << render_marking(m) << '\n';
    if (og.truncated) {
      err << "error: state space truncated; deadlock list is incomplete\n";
      return kExitFailure;
    }
  }
  return kExitOk;
}

struct ImportOptions {
  std::string path;
  std::string output;
};

int cmd_import_owl(const ImportOptions& opts, std::ostream& out, std::ostream& err) {
  auto text = read_file(opts.path);
  if (!text) {
    err << "error: cannot read " << opts.path << '\n';
    return kExitUsage;
  }
  OwlImportResult imported;
  try {
    imported = import_owl_functional(*text);
  } catch (const Error& e) {
    err << location(opts.path, e.line()) << ": " << to_string(e.kind()) << ": " << e.detail()
        << '\n';
    return kExitFailure;
  }
  for (const auto& w : imported.warnings) err << "warning: " << opts.path << ": " << w << '\n';

  std::string native = serialize_native_graph(imported.graph);
  std::ostream& summary = opts.output.empty() ? err : out;
  if (opts.output.empty()) {
    out << native;
  } else {
    std::ofstream file(opts.output, std::ios::binary);
    file << native;
    if (!file) {
      err << "error: cannot write " << opts.output << '\n';
      return kExitUsage;
    }
  }
  summary << "skipped " << imported.skipped() << " axioms\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Petri nets over ontological graphs", "pnog"};
  app.require_subcommand(1);

  std::string validate_path;
  bool strict = false;
  auto* validate = app.add_subcommand("validate", "Check a net file against the net item rules");
  validate->add_option("netfile", validate_path, "Net file (.pnog)")->required();
  validate->add_flag("--strict", strict, "IMPNOG input formulas must be bare concepts");

  RunOptions run_opts;
  auto* run = app.add_subcommand("run", "Fire transitions and print the trace");
  run->add_option("netfile", run_opts.path, "Net file (.pnog)")->required();
  run->add_option("--policy", run_opts.policy, "first | random | script")
      ->check(CLI::IsMember({"first", "random", "script"}));
  run->add_option("--seed", run_opts.seed, "Seed for the random policy");
  run->add_option("--steps", run_opts.steps, "Maximum number of steps");
  run->add_option("--script", run_opts.script, "Comma-separated transition ids");

  std::string step_path;
  auto* step = app.add_subcommand("step", "Interactive stepper");
  step->add_option("netfile", step_path, "Net file (.pnog)")->required();

  ReachOptions reach_opts;
  auto* reach = app.add_subcommand("reach", "Build the occurrence graph");
  reach->add_option("netfile", reach_opts.path, "Net file (.pnog)")->required();
  reach->add_option("--max-states", reach_opts.max_states, "State budget");
  reach->add_option("--dot", reach_opts.dot, "Write the graph as DOT to this file");
  reach->add_flag("--deadlocks", reach_opts.deadlocks, "List deadlock markings");

  ImportOptions import_opts;
  auto* import = app.add_subcommand("import-owl", "Convert OWL functional syntax to .og");
  import->add_option("owlfile", import_opts.path, "OWL 2 functional-syntax file (.ofn)")
      ->required();
  import->add_option("-o,--output", import_opts.output, "Output .og file (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*validate) return cmd_validate(validate_path, strict, out, err);
    if (*run) return cmd_run(run_opts, out, err);
    if (*reach) return cmd_reach(reach_opts, out, err);
    if (*import) return cmd_import_owl(import_opts, out, err);
    if (*step) {
      auto loaded = load_net(step_path, ValidationMode::Default, out, err);
      if (!loaded.net) return loaded.status;
      run_repl(*loaded.net, in, out);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace pnog::cli
