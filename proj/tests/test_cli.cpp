#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "oracle.hpp"

namespace fs = std::filesystem;
using namespace prefkb;
using namespace prefkb::testing;

namespace {

const std::string kCases = PREFKB_CASES_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("prefkb_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"entail"}).code == cli::kUsage);
  CHECK(run({"entail", kCases + "/pierson.kb", "--bound", "0"}).code == cli::kUsage);
  CHECK(run({"entail", kCases + "/pierson.kb", "--engine", "magic"}).code == cli::kUsage);
  CHECK(run({"suite", "nonsense"}).code == cli::kUsage);
  CHECK(run({"replay", kCases + "/pierson.proof"}).code == cli::kUsage);
  Run missing = run({"entail", kCases + "/does-not-exist.kb"});
  CHECK(missing.code == cli::kUsage);
  CHECK(contains(missing.err, "error:"));
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("the enum engine needs a small explicit bound") {
  CHECK(run({"entail", kCases + "/pierson.kb", "--engine", "enum"}).code == cli::kUsage);
  CHECK(run({"entail", kCases + "/pierson.kb", "--engine", "both", "--bound", "4"}).code == cli::kUsage);
  CHECK(run({"suite", "meta", "--engine", "enum"}).code == cli::kUsage);
  Run ok = run({"entail", kCases + "/pierson.kb", "--engine", "both", "--bound", "2"});
  CHECK(ok.code == cli::kOk);
  CHECK_FALSE(contains(ok.out, "DISAGREEMENT"));
}

TEST_CASE("entail, check and model") {
  Run e = run({"entail", kCases + "/pierson.kb", "--bound", "4"});
  CHECK(e.code == cli::kOk);
  CHECK(contains(e.out, "goal for-pierson: BOUNDED-VALID (no countermodel up to 4 worlds)"));

  Run c = run({"check", kCases + "/conflict_will_stab.kb"});
  CHECK(c.code == cli::kFailure);
  CHECK(contains(c.out, "COUNTERMODEL (1 world, fails at w0)"));
  CHECK(contains(c.out, "w0: succ = {}"));

  Run m = run({"model", kCases + "/conti.kb", "--bound", "2"});
  CHECK(m.code == cli::kOk);
  CHECK(contains(m.out, "SATISFIABLE (1 world)"));
}

TEST_CASE("dot output of the first witness") {
  fs::path dir = scratch_dir("dot");
  fs::path dot = dir / "w.dot";
  Run c = run({"check", kCases + "/conflict_will_stab.kb", "--dot", dot.string()});
  CHECK(c.code == cli::kFailure);
  REQUIRE(fs::exists(dot));
  DotGraph g;
  REQUIRE(parse_dot(slurp(dot), g));
  CHECK(g.nodes == std::vector<std::string>{"w0"});
  CHECK(g.edges.empty());
}

TEST_CASE("replay through the command line") {
  Run ok = run({"replay", kCases + "/pierson.proof", "--kb", kCases + "/pierson.kb"});
  CHECK(ok.code == cli::kOk);
  CHECK(contains(ok.out, "replay: all steps pass"));

  fs::path dir = scratch_dir("replay");
  std::string general = slurp(kCases + "/general.kb");
  auto start = general.find("(axiom R2");
  auto end = general.find("(axiom R3");
  REQUIRE(start != std::string::npos);
  general.erase(start, end - start);
  std::ofstream(dir / "general.kb") << general;
  fs::copy_file(kCases + "/pierson.kb", dir / "pierson.kb");
  Run bad = run({"replay", kCases + "/pierson.proof", "--kb", (dir / "pierson.kb").string()});
  CHECK(bad.code == cli::kFailure);
  CHECK(contains(bad.out, "step s2: FAILED (missing R2)"));
  CHECK(contains(bad.out, "step s8: FAILED (depends on failed step s2)"));
  CHECK(contains(bad.out, "replay: FAILED at step s2"));
  CHECK(contains(bad.err, "warning: step s2 cites unknown name R2"));
}

TEST_CASE("suites") {
  Run meta = run({"suite", "meta"});
  CHECK(meta.code == cli::kOk);
  CHECK(contains(meta.out, "meta: 17 passed, 0 failed, 0 skipped"));
  Run capped = run({"suite", "meta", "--engine", "both", "--bound", "2"});
  CHECK(capped.code == cli::kOk);
  CHECK(contains(capped.out, "skipped"));
  CHECK(run({"suite", "values"}).code == cli::kOk);
}

TEST_CASE("suite output is deterministic for a fixed seed") {
  Run a = run({"suite", "cases", "--seed", "7"});
  Run b = run({"suite", "cases", "--seed", "7"});
  CHECK(a.code == cli::kOk);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
}

TEST_CASE("a run that exhausts its budget reports unknown with exit 2") {
  Run r = run({"entail", kCases + "/pierson.kb", "--budget", "0.000000001"});
  CHECK(contains(r.out, "UNKNOWN"));
  CHECK(r.code == cli::kUsage);
}
