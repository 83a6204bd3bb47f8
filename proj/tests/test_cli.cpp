#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(UMBRELLA_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path workdir() {
  fs::path d = fs::path(CLI_WORKDIR);
  fs::create_directories(d);
  return d;
}

std::string file(const std::string& name) { return (workdir() / name).string(); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("gen reports generator counts and GK dimension") {
  auto g = run("gen --r 2 --s 1");
  CHECK(g.code == 0);
  CHECK(contains(g.out, "generators = 8"));
  CHECK(contains(g.out, "GKdim = 8"));
  CHECK(contains(run("gen --r 4 --s 2").out, "GKdim = 19"));
  CHECK(contains(run("gen --r 3 --s 1").out, "GKdim = 13"));
  const auto j = json::parse(run("gen --r 3 --s 1 --format json").out);
  CHECK(j["generators"].size() == 13);
  CHECK(j["relations"].size() == 78);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("gen --r 1 --s 1").code == 2);
  CHECK(run("gen").code == 2);
  CHECK(run("check " + file("does-not-exist.json")).code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("query nf --r 2 --s 1").code == 2);  // no --expr
  CHECK(run("query nakayama --wzz 0").code == 2);
  spit(file("bad.json"), "{ not json");
  CHECK(run("check " + file("bad.json")).code == 2);
  spit(file("sym.json"), "[[\"0\",\"1\"],[\"1\",\"0\"]]");
  CHECK(run("gen --matrix " + file("sym.json")).code == 2);
}

TEST_CASE("matrix input") {
  spit(file("zero3.json"), "[[0,0,0],[0,0,0],[0,0,0]]");
  auto g = run("gen --matrix " + file("zero3.json"));
  CHECK(g.code == 0);
  CHECK(contains(g.out, "generators = 16"));
  spit(file("a3.json"), "{\"A\": [[\"0\",\"2\",\"1\"],[\"-2\",\"0\",\"3\"],[\"-1\",\"-3\",\"0\"]]}");
  auto iso = run("query iso --matrix " + file("a3.json") + " --format json --no-timing");
  CHECK(iso.code == 0);
  const auto j = json::parse(iso.out);
  CHECK(j["verdict"] == "pass");
  CHECK(j["result"]["s"] == 1);
}

TEST_CASE("check, stamp, query lifecycle") {
  const std::string f = file("um22.json");
  REQUIRE(run("gen --r 2 --s 1 --out " + f).code == 0);
  CHECK(run("query nf --expr \"y2 y1\" " + f).code == 3);
  auto forced = run("query nf --force --expr \"y2 y1\" " + f);
  CHECK(forced.code == 0);
  auto c = run("check " + f);
  CHECK(c.code == 0);
  CHECK(contains(c.out, "verdict: pass"));
  auto q = run("query nf --expr \"y2 y1\" " + f);
  CHECK(q.code == 0);
  CHECK(q.out == "y1 y2 - 1/3 x0 x0 x0\n");
  CHECK(run("query order --expr y1 " + f).out == "order = 2\n");
  CHECK(run("query hilbert --cutoff 2 " + f).out == "30\n");
  CHECK(contains(run("query primitives --cutoff 2 " + f).out, "dim = 6"));
  // a stale stamp is refused
  json j = json::parse(slurp(f));
  j["relations"][0]["f"] = "x0";
  spit(f, j.dump(2));
  CHECK(run("query nf --expr x1 " + f).code == 3);
}

TEST_CASE("mutant relation fails the Hopf ideal check with exit 1") {
  const std::string f = file("mutant.json");
  REQUIRE(run("gen --r 2 --s 1 --out " + f).code == 0);
  json j = json::parse(slurp(f));
  bool edited = false;
  for (auto& rel : j["relations"])
    if (rel["pair"] == json::array({6, 7})) {
      CHECK(rel["f"] == "1/3 x0 x0 x0");
      rel["f"] = "1/2 x0 x0 x0";
      edited = true;
    }
  REQUIRE(edited);
  spit(f, j.dump(2));
  auto c = run("check " + f + " --format json --no-timing");
  CHECK(c.code == 1);
  const auto rep = json::parse(c.out);
  CHECK(rep["verdict"] == "fail");
  REQUIRE(rep["failures"].size() == 1);
  CHECK(rep["failures"][0]["stage"] == "hopf_ideal");
  CHECK(rep["failures"][0]["what"] == "coproduct of relation (y1,y2)");
  CHECK(rep["failures"][0]["residue"] == "1/2 x0 x0 ⊗ x0 + 1/2 x0 ⊗ x0 x0");
  CHECK(!json::parse(slurp(f)).contains("verified"));
  CHECK(run("query nf --expr x1 " + f).code == 3);
}

TEST_CASE("weight condition violation exits 1 with the condition named") {
  const std::string f = file("cond2.json");
  REQUIRE(run("gen --r 2 --s 1 --out " + f).code == 0);
  json j = json::parse(slurp(f));
  j["relations"][0]["f"] = "x0 x0 x0";  // pair (x0,x1), weight 3 > 2
  spit(f, j.dump(2));
  auto c = run("check " + f + " --format json");
  CHECK(c.code == 1);
  CHECK(contains(json::parse(c.out)["failures"][0]["what"].get<std::string>(), "condition (2) failed at (0,1)"));
}

TEST_CASE("three-generator example") {
  const std::string f = file("wzz.json");
  REQUIRE(run("gen --wzz 0 --out " + f).code == 0);
  CHECK(run("check " + f).code == 0);
  CHECK(run("query nf --expr \"z x\" " + f).out == "x z - z\n");
  CHECK(run("query order --expr z " + f).out == "order = 2\n");
}

TEST_CASE("queries on generated algebras") {
  CHECK(contains(run("query primitives --r 4 --s 2 --cutoff 2").out, "dim = 15"));
  CHECK(run("query hilbert --r 2 --s 1 --cutoff 0").out == "1\n");
  auto n = run("query nakayama --r 5 --s 2 --format json --no-timing");
  CHECK(n.code == 0);
  CHECK(json::parse(n.out)["verdict"] == "pass");
  auto cf = run("query commfilt --r 2 --s 1 --k 2 --cutoff 4 --format json --no-timing");
  CHECK(cf.code == 1);
  CHECK(json::parse(cf.out)["result"]["witness"] == "[x1, x2] = x0 has order 1");
  CHECK(run("query commfilt --r 2 --s 1 --k 1 --cutoff 4").code == 0);
  auto cr = run("query crossed --r 2 --s 1 --cutoff 3 --format json --no-timing");
  CHECK(cr.code == 0);
  CHECK(json::parse(cr.out)["result"]["action_orientation"] == "displayed");
}

TEST_CASE("reports are byte-identical for identical runs") {
  const std::string a = file("rep_a.json"), b = file("rep_b.json");
  CHECK(run("check --r 3 --s 1 --no-timing --out " + a).code == 0);
  CHECK(run("check --r 3 --s 1 --no-timing --out " + b).code == 0);
  CHECK(slurp(a) == slurp(b));
  const auto rep = json::parse(slurp(a));
  CHECK(rep["check"] == "check");
  CHECK(rep["target"]["family"] == "UM");
  CHECK(rep["target"]["r"] == 3);
  CHECK(rep["target"]["s"] == 1);
  CHECK(rep["verdict"] == "pass");
  CHECK(rep["stages"]["confluence"]["triples_total"] == 286);
  CHECK(rep["failures"].empty());
}

TEST_CASE("presentation JSON survives a load and save byte for byte") {
  const std::string f = file("rt.json");
  REQUIRE(run("gen --r 3 --s 1 --out " + f).code == 0);
  const std::string before = slurp(f);
  // gen from the same data again, via --format json, must agree with the file
  CHECK(run("gen --r 3 --s 1 --format json").out == before);
  CHECK(run("check " + f).code == 0);
  json stamped = json::parse(slurp(f));
  stamped.erase("verified");
  CHECK(stamped.dump(2) + "\n" == before);
}
