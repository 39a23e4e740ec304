// End-to-end tests of the command-line tool: spawn the built binary, parse
// its JSON reports, and pin the exit-code contract.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  json report;  // parsed stdout when it is JSON
};

fs::path work_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "treespan_cli_tests";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

CliResult run_cli(const std::string& args) {
  fs::path out_file = work_dir() / "stdout.txt";
  std::string cmd = std::string(TREESPAN_CLI_PATH) + " " + args + " > " + out_file.string() +
                    " 2> " + (work_dir() / "stderr.txt").string();
  int status = std::system(cmd.c_str());
  CliResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  if (!r.out.empty() && r.out[0] == '{') r.report = json::parse(r.out);
  return r;
}

std::string path_of(const std::string& name) { return (work_dir() / name).string(); }

void write_text(const std::string& name, const std::string& content) {
  std::ofstream f(path_of(name));
  f << content;
}

}  // namespace

TEST_CASE("gen writes snowflake instances with the documented order") {
  auto r = run_cli("gen snowflake -k 3 -o " + path_of("g3.gr") + " --td " + path_of("g3.td"));
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["n"] == 12);
  CHECK(r.report["m"] == 21);
  CHECK(r.report["td_provenance"] == "triangle-bags");
  std::ifstream g(path_of("g3.gr"));
  std::string header;
  std::getline(g, header);
  CHECK(header == "p 12 21");
}

TEST_CASE("build on a snowflake with its triangle decomposition") {
  run_cli("gen snowflake -k 3 -o " + path_of("b3.gr") + " --td " + path_of("b3.td"));
  auto r = run_cli("build -g " + path_of("b3.gr") + " -d " + path_of("b3.td") + " --out-tree " +
                   path_of("b3.tree") + " --out-report " + path_of("b3.json"));
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["schema"] == 1);
  CHECK(r.report["provenance"] == "input-decomposition");
  CHECK(r.report["rho"] == 1);
  int d = r.report["d"];
  CHECK(r.report["bound"] == 8 * (2 * d + 1));
  CHECK(r.report["stretch"]["bound_holds"] == true);
  CHECK(r.report["trace"]["levels"].size() == static_cast<size_t>(d) + 1);
  CHECK(fs::exists(path_of("b3.json")));

  // The emitted tree must verify clean at the reported bound.
  auto v = run_cli("verify -g " + path_of("b3.gr") + " -t " + path_of("b3.tree") + " --bound " +
                   std::to_string(static_cast<int>(r.report["bound"])));
  CHECK(v.exit_code == 0);
  CHECK(v.report["stretch"]["max_additive"] == r.report["stretch"]["max_additive"]);
}

TEST_CASE("build without a decomposition uses the heuristic and says so") {
  run_cli("gen grid --rows 4 --cols 5 -o " + path_of("grid.gr"));
  auto r = run_cli("build -g " + path_of("grid.gr"));
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["provenance"] == "heuristic-decomposition");
  CHECK(r.report["stretch"]["bound_holds"] == true);
}

TEST_CASE("exit 2 on unparseable input") {
  write_text("broken.gr", "p 3\n1 2\n");
  CHECK(run_cli("build -g " + path_of("broken.gr")).exit_code == 2);
  CHECK(run_cli("build -g " + path_of("missing_file.gr")).exit_code == 2);
}

TEST_CASE("exit 3 on a disconnected graph") {
  write_text("disc.gr", "p 4 2\n1 2\n3 4\n");
  CHECK(run_cli("build -g " + path_of("disc.gr")).exit_code == 3);
}

TEST_CASE("exit 4 on an invalid decomposition") {
  write_text("p3.gr", "p 3 2\n1 2\n2 3\n");
  write_text("bad.td", "s td 2 1 3\nb 1 1\nb 2 3\n1 2\n");  // vertex 2 uncovered
  CHECK(run_cli("build -g " + path_of("p3.gr") + " -d " + path_of("bad.td")).exit_code == 4);
  auto r = run_cli("decomp validate -g " + path_of("p3.gr") + " -d " + path_of("bad.td"));
  CHECK(r.exit_code == 4);
  CHECK(r.report["valid"] == false);
  CHECK(r.report["violations"].size() >= 1);
}

TEST_CASE("verify measures a tree equal to its graph as exact") {
  write_text("path.gr", "p 4 3\n1 2\n2 3\n3 4\n");
  write_text("path.tree", "1 2\n2 3\n3 4\n");
  auto r = run_cli("verify -g " + path_of("path.gr") + " -t " + path_of("path.tree"));
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["stretch"]["max_additive"] == 0);
  CHECK(r.report["stretch"]["mode"] == "exact");
}

TEST_CASE("verify flags a violated bound with exit 5") {
  std::ostringstream g, t;
  g << "p 8 8\n";
  for (int v = 1; v <= 8; ++v) g << v << " " << v % 8 + 1 << "\n";
  for (int v = 1; v <= 7; ++v) t << v << " " << v + 1 << "\n";
  write_text("c8.gr", g.str());
  write_text("c8.tree", t.str());
  auto r = run_cli("verify -g " + path_of("c8.gr") + " -t " + path_of("c8.tree") + " --bound 5");
  CHECK(r.exit_code == 5);
  CHECK(r.report["stretch"]["max_additive"] == 6);
  CHECK(r.report["stretch"]["bound_holds"] == false);
}

TEST_CASE("verify rejects a non-spanning tree with exit 4") {
  write_text("c4.gr", "p 4 4\n1 2\n2 3\n3 4\n4 1\n");
  write_text("c4.notree", "1 2\n2 3\n");
  CHECK(run_cli("verify -g " + path_of("c4.gr") + " -t " + path_of("c4.notree")).exit_code == 4);
}

TEST_CASE("sampled verification is deterministic under a seed") {
  run_cli("gen random -n 40 -m 70 --seed 11 -o " + path_of("r.gr"));
  std::string cmd = "verify -g " + path_of("r.gr") + " -t " + path_of("r.tree") +
                    " --sampled 200 --seed 7";
  auto b = run_cli("build -g " + path_of("r.gr") + " --out-tree " + path_of("r.tree"));
  REQUIRE(b.exit_code == 0);
  auto first = run_cli(cmd);
  auto second = run_cli(cmd);
  REQUIRE(first.exit_code == 0);
  CHECK(first.report["stretch"] == second.report["stretch"]);
  CHECK(first.report["stretch"]["seed"] == 7);
}

TEST_CASE("tree-metrics reports depth, level sizes, and pbt") {
  write_text("p5.tree", "p 5 4\n1 2\n2 3\n3 4\n4 5\n");
  auto r = run_cli("tree-metrics -t " + path_of("p5.tree"));
  REQUIRE(r.exit_code == 0);
  CHECK(r.report["d"] == 1);
  CHECK(r.report["pbt"] == 1);
  CHECK(r.report["level_sizes"] == json::array({5, 1}));
  write_text("c4loop.gr", "p 4 4\n1 2\n2 3\n3 4\n4 1\n");
  CHECK(run_cli("tree-metrics -t " + path_of("c4loop.gr")).exit_code == 4);
}

TEST_CASE("decomp breadth and normalize round trip") {
  run_cli("gen snowflake -k 4 -o " + path_of("s4.gr") + " --td " + path_of("s4.td"));
  auto b = run_cli("decomp breadth -g " + path_of("s4.gr") + " -d " + path_of("s4.td"));
  REQUIRE(b.exit_code == 0);
  CHECK(b.report["breadth"] == 1);
  auto n = run_cli("decomp normalize -d " + path_of("s4.td") + " -o " + path_of("s4n.td"));
  REQUIRE(n.exit_code == 0);
  CHECK(n.report["bags_after"] <= n.report["bags_before"]);
  auto again = run_cli("decomp normalize -d " + path_of("s4n.td") + " -o " + path_of("s4nn.td"));
  CHECK(again.report["bags_after"] == n.report["bags_after"]);
}

TEST_CASE("decomp from-spanner checks the claimed stretch") {
  write_text("c6.gr", "p 6 6\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n");
  write_text("c6.tree", "1 2\n2 3\n3 4\n4 5\n5 6\n");
  auto ok = run_cli("decomp from-spanner -g " + path_of("c6.gr") + " -t " + path_of("c6.tree") +
                    " -k 5 -o " + path_of("c6.td"));
  REQUIRE(ok.exit_code == 0);
  CHECK(ok.report["valid"] == true);
  CHECK(ok.report["breadth"] <= 3);
  auto bad = run_cli("decomp from-spanner -g " + path_of("c6.gr") + " -t " + path_of("c6.tree") +
                     " -k 4");
  CHECK(bad.exit_code == 4);
}

TEST_CASE("gen is deterministic for a fixed seed") {
  run_cli("gen random -n 25 -m 40 --seed 5 -o " + path_of("d1.gr"));
  run_cli("gen random -n 25 -m 40 --seed 5 -o " + path_of("d2.gr"));
  std::ifstream a(path_of("d1.gr")), b(path_of("d2.gr"));
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(!sa.str().empty());
}
