#include "fixtures.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "pnog/ontoio.hpp"

namespace pnog::test {

std::string fixture_path(const std::string& name) { return std::string(PNOG_FIXTURE_DIR) + "/" + name; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_fixture(const std::string& name) { return read_text(fixture_path(name)); }

std::shared_ptr<const OntologicalGraph> fixture_graph(const std::string& name) {
  return std::make_shared<const OntologicalGraph>(parse_native_graph(read_fixture(name)));
}

GraphLoader fixture_loader() {
  return [](const std::string& path) { return fixture_graph(path); };
}

Pnog example_net() { return parse_netfile(read_fixture("example.pnog"), fixture_loader()); }

BoundNet example_bound_net() { return BoundNet(example_net()); }

Marking instances(std::initializer_list<const char*> ids) {
  Marking out;
  for (const char* id : ids)
    out.push_back(std::string_view(id) == "_" ? Token::empty(NetKind::IMPNOG)
                                              : Token::instance_token(id));
  return out;
}

}  // namespace pnog::test

namespace pnog::test {

namespace fs = std::filesystem;

TempDir::TempDir() {
  static int counter = 0;
  std::random_device entropy;
  path_ = fs::temp_directory_path() /
          ("pnog-test-" + std::to_string(entropy()) + "-" + std::to_string(++counter));
  fs::create_directories(path_);
  for (const char* name : {"og1.og", "og2.og", "og1.ofn", "og2.ofn", "unsupported.ofn", "example.pnog"})
    fs::copy_file(fixture_path(name), path_ / name);
}

TempDir::~TempDir() {
  std::error_code ignored;
  fs::remove_all(path_, ignored);
}

std::string TempDir::write(const std::string& name, const std::string& text) const {
  fs::path file = path_ / name;
  std::ofstream out(file, std::ios::binary);
  out << text;
  return file.string();
}

std::vector<BadNetfile> bad_netfiles() {
  const std::string impnog =
      "net bad kind=IMPNOG\n"       // 1
      "use og1.og as og1\n"         // 2
      "use og2.og as og2\n"         // 3
      "place pl1 ontology=og1\n"    // 4
      "place pl2 ontology=og2\n"    // 5
      "transition tr1\n"            // 6
      "in pl1 tr1 \"Passenger\"\n"  // 7
      "out tr1 pl1 \"p1\"\n";       // 8
  const std::string cmpnog =
      "net bad kind=CMPNOG\n"
      "use og1.og as og1\n"
      "use og2.og as og2\n"
      "place pl1 ontology=og1\n"
      "place pl2 ontology=og2\n"
      "transition tr1\n"
      "in pl1 tr1 \"<Passenger>\"\n"
      "out tr1 pl1 \"Passenger\"\n";
  return {
      {"cmpnog_instance_output.pnog", cmpnog + "out tr1 pl2 \"passport\"\n", ":9: out (tr1,pl2)"},
      {"impnog_concept_output.pnog", impnog + "out tr1 pl2 \"Document\"\n", ":9: out (tr1,pl2)"},
      {"unbound_formula_id.pnog", impnog + "in pl2 tr1 \"[Passenger]\"\n", ":9: in (pl2,tr1)"},
      {"ill_typed_m0.pnog", impnog + "m0 pl2 p1\n", ":9: m0 pl2"},
      {"strict_non_bare.pnog", impnog + "in pl2 tr1 \"<Document>\"\n", ":9: in (pl2,tr1)", true},
  };
}

}  // namespace pnog::test
