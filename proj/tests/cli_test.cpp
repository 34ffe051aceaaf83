#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "pnog/ontoio.hpp"

namespace pnog::cli {
namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int status = run_cli(args, in, out, err);
  return {status, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  test::TempDir dir;
  std::string file(const std::string& name) const { return (dir.path() / name).string(); }
};

TEST_F(CliTest, ValidateExample) {
  auto r = run({"validate", file("example.pnog")});
  EXPECT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(r.out, "OK: 4 places, 5 transitions\n");
}

TEST_F(CliTest, ValidateConceptOutputOnInstanceNet) {
  std::string text = test::read_fixture("example.pnog");
  const std::string original = "out tr5 pl4 \"admission\"";
  text.replace(text.find(original), original.size(), "out tr5 pl4 \"Document\"");
  auto path = dir.write("concept_out.pnog", text);
  auto r = run({"validate", path});
  EXPECT_EQ(r.status, kExitFailure);
  EXPECT_EQ(r.out, path + ":28: out (tr5,pl4): output term must be an instance; 'Document' is not "
                          "an instance of ontology og2\n");
}

TEST_F(CliTest, ValidateMissingAndGarbledFiles) {
  EXPECT_EQ(run({"validate", file("nope.pnog")}).status, kExitUsage);
  auto path = dir.write("garbled.pnog", "net x kind=IMPNOG\nplace\n");
  auto r = run({"validate", path});
  EXPECT_EQ(r.status, kExitUsage);
  EXPECT_EQ(r.err.rfind(path + ":2: SyntaxError", 0), 0u) << r.err;
  EXPECT_EQ(run({"validate", dir.write("badgraph.pnog", "net x kind=IMPNOG\nuse none.og as g\n")}).status,
            kExitUsage);
}

TEST_F(CliTest, ValidateCraftedBadNetfiles) {
  for (const auto& bad : test::bad_netfiles()) {
    auto path = dir.write(bad.name, bad.text);
    std::vector<std::string> args{"validate", path};
    if (bad.strict) {
      EXPECT_EQ(run(args).status, kExitOk) << bad.name;
      args.push_back("--strict");
    }
    auto r = run(args);
    EXPECT_EQ(r.status, kExitFailure) << bad.name << r.err;
    EXPECT_EQ(r.out.rfind(path + bad.coordinates, 0), 0u) << r.out;
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1) << r.out;
  }
}

TEST_F(CliTest, RunScript) {
  auto r = run({"run", file("example.pnog"), "--policy", "script", "--script", "tr2,tr3,tr5"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out,
            "step_1: fired=tr2 marking=(p1,passport,_,_)\n"
            "step_2: fired=tr3 marking=(p1,passport,visa,_)\n"
            "step_3: fired=tr5 marking=(p1,_,_,admission)\n"
            "final: (p1,_,_,admission)\n");
}

TEST_F(CliTest, RunFirstEndsInDeadlock) {
  auto r = run({"run", file("example.pnog")});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("step_5: fired=tr3 marking=(p1,passport,visa,admission)\n"
                       "final: (p1,passport,visa,admission) deadlock\n"),
            std::string::npos)
      << r.out;
}

TEST_F(CliTest, RunZeroSteps) {
  auto r = run({"run", file("example.pnog"), "--steps", "0"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, "final: (p1,_,_,_)\n");
}

TEST_F(CliTest, RunRandomIsStable) {
  auto a = run({"run", file("example.pnog"), "--policy", "random", "--seed", "7"});
  auto b = run({"run", file("example.pnog"), "--policy", "random", "--seed", "7"});
  EXPECT_EQ(a.status, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("final: "), std::string::npos);
}

TEST_F(CliTest, RunBlockedScriptStep) {
  auto r = run({"run", file("example.pnog"), "--policy", "script", "--script", "tr2,tr4"});
  EXPECT_EQ(r.status, kExitFailure);
  EXPECT_EQ(r.out, "step_1: fired=tr2 marking=(p1,passport,_,_)\n");
  EXPECT_NE(r.err.find("script step 2 (tr4) is not enabled"), std::string::npos) << r.err;
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).status, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).status, kExitUsage);
  EXPECT_EQ(run({"run", file("example.pnog"), "--policy", "sideways"}).status, kExitUsage);
  EXPECT_EQ(run({"run", file("example.pnog"), "--script", "tr2"}).status, kExitUsage);
  EXPECT_EQ(run({"run", file("example.pnog"), "--steps", "many"}).status, kExitUsage);
  EXPECT_EQ(run({"reach", file("example.pnog"), "--max-states", "0"}).status, kExitUsage);
  EXPECT_EQ(run({"validate"}).status, kExitUsage);
  auto help = run({"--help"});
  EXPECT_EQ(help.status, kExitOk);
  EXPECT_NE(help.out.find("import-owl"), std::string::npos);
}

TEST_F(CliTest, ReachSummaryAndDot) {
  auto dot = file("g.dot");
  auto r = run({"reach", file("example.pnog"), "--dot", dot, "--deadlocks"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out,
            "states=8 edges=9 truncated=false\n"
            "deadlocks=1\n"
            "deadlock: (p1,passport,visa,admission)\n");
  std::string first = test::read_text(dot);
  run({"reach", file("example.pnog"), "--dot", dot});
  EXPECT_EQ(test::read_text(dot), first);
  EXPECT_EQ(first.rfind("digraph occurrence_graph {", 0), 0u);
}

TEST_F(CliTest, ReachTruncated) {
  auto r = run({"reach", file("example.pnog"), "--max-states", "1"});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, "states=1 edges=0 truncated=true\n");
  r = run({"reach", file("example.pnog"), "--max-states", "1", "--deadlocks"});
  EXPECT_EQ(r.status, kExitFailure);
}

TEST_F(CliTest, ImportOwl) {
  auto out = file("og1_imported.og");
  auto r = run({"import-owl", file("og1.ofn"), "-o", out});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, "skipped 0 axioms\n");
  EXPECT_EQ(test::read_text(out), test::read_fixture("og1.og"));

  r = run({"import-owl", file("unsupported.ofn")});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.err.find("skipped 3 axioms"), std::string::npos) << r.err;
  EXPECT_EQ(r.out.rfind("ontology travel\n", 0), 0u) << r.out;

  auto wrapper = dir.write("wrapper.ofn", "Ontology(<http://example.org/w>)\n");
  r = run({"import-owl", wrapper});
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out, "ontology w\n");
  EXPECT_EQ(r.err, "skipped 0 axioms\n");

  EXPECT_EQ(run({"import-owl", dir.write("broken.ofn", "Ontology(\n")}).status, kExitFailure);
  auto collide = dir.write("collide.ofn",
                           "Ontology(Declaration(Class(<http://a#X>)) Declaration(Class(<http://b#X>)))\n");
  EXPECT_EQ(run({"import-owl", collide}).status, kExitFailure);
  EXPECT_EQ(run({"import-owl", file("missing.ofn")}).status, kExitUsage);
}

TEST_F(CliTest, NetUsingOwlGraph) {
  std::string text = test::read_fixture("example.pnog");
  text.replace(text.find("og1.og as"), 6, "og1.ofn");
  auto r = run({"run", dir.write("owl.pnog", text), "--policy", "script", "--script", "tr2,tr3,tr5"});
  EXPECT_EQ(r.status, kExitOk) << r.err;
  EXPECT_NE(r.out.find("final: (p1,_,_,admission)"), std::string::npos);
}

TEST_F(CliTest, StepTranscript) {
  auto r = run({"step", file("example.pnog")},
               "undo\nfire tr4\nfire 1\nshow pl1\nshow pl2\nfire tr3\nundo\nbogus\nreset\nshow pl3\nquit\n");
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_EQ(r.out,
            "marking: (p1,_,_,_)\n"
            "enabled: 1: tr2  2: tr3\n"
            "> nothing to undo\n"
            "> not enabled: input condition failed at pl1\n"
            "> fired tr2\n"
            "marking: (p1,passport,_,_)\n"
            "enabled: 1: tr3\n"
            "> pl1 = p1 [ontology og1] instance of: Passenger, TOP, Visa_passenger\n"
            "> pl2 = passport [ontology og2] instance of: Document, TOP\n"
            "> fired tr3\n"
            "marking: (p1,passport,visa,_)\n"
            "enabled: 1: tr5\n"
            "> marking: (p1,passport,_,_)\n"
            "enabled: 1: tr3\n"
            "> unknown command 'bogus'; commands: fire <n|transition>, undo, reset, show <place>, help, quit\n"
            "> marking: (p1,_,_,_)\n"
            "enabled: 1: tr2  2: tr3\n"
            "> pl3 = _ [ontology og2] empty\n"
            "> ");
}

TEST_F(CliTest, StepConceptNetShowsHierarchy) {
  auto path = dir.write("concepts.pnog",
                        "net c kind=CMPNOG\n"
                        "use og1.og as og1\n"
                        "place pl1 ontology=og1\n"
                        "transition t\n"
                        "in pl1 t \"<Passenger>\"\n"
                        "out t pl1 \"Passenger\"\n"
                        "m0 pl1 Visa_passenger\n");
  auto r = run({"step", path}, "show pl1\nfire 1\nfire 1\nfire 5\n");
  EXPECT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("pl1 = Visa_passenger [ontology og1] superclasses: Passenger, TOP; equivalents: -\n"),
            std::string::npos)
      << r.out;
  EXPECT_NE(r.out.find("enabled: none (deadlock)\n"), std::string::npos);
  EXPECT_NE(r.out.find("no enabled transition numbered 1\n"), std::string::npos);
}

}  // namespace
}  // namespace pnog::cli
