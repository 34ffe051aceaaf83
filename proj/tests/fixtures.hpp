#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "pnog/netfile.hpp"

namespace pnog::test {

std::string fixture_path(const std::string& name);
std::string read_text(const std::string& path);
std::string read_fixture(const std::string& name);

std::shared_ptr<const OntologicalGraph> fixture_graph(const std::string& name);
GraphLoader fixture_loader();

// The passenger admission net (example.pnog) and its markings.
Pnog example_net();
BoundNet example_bound_net();
// IMPNOG marking from ids; "_" is the empty token.
Marking instances(std::initializer_list<const char*> ids);

// A fresh directory holding copies of the graph fixtures; removed on scope exit.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const noexcept { return path_; }
  std::string write(const std::string& name, const std::string& text) const;

 private:
  std::filesystem::path path_;
};

// Netfiles that each break one validation rule. `coordinates` is the
// violation line the CLI must print, e.g. "bad.pnog:9: out (tr5,pl4)".
struct BadNetfile {
  std::string name;
  std::string text;
  std::string coordinates;
  bool strict = false;
};
std::vector<BadNetfile> bad_netfiles();

}  // namespace pnog::test
