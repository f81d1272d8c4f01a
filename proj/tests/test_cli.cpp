#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "deflab/report.hpp"
#include "oracles.hpp"

using deflab::Json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(DEFLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string corpus(const char* name) { return oracle::corpus(name); }

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "deflab_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("parse") {
  Run r = run("parse " + corpus("genus2"));
  CHECK(r.status == 0);
  Json j = Json::parse(r.out);
  CHECK(j["generators"].size() == 4);
  CHECK(j["abelianization"]["free_rank"] == 4);
}

TEST_CASE("subgroups and schreier") {
  Run r = run("subgroups " + corpus("free2") + " --max-index 3");
  CHECK(r.status == 0);
  CHECK(Json::parse(r.out)["subgroups"].size() == 1 + 3 + 13);
  Run s = run("schreier " + corpus("genus2") + " --index-spec 2:1");
  CHECK(s.status == 0);
  Json j = Json::parse(s.out);
  CHECK(j["presentation"]["generators"].size() == 7);
  CHECK(run("schreier " + corpus("genus2") + " --index-spec 2:99").status == 1);
}

TEST_CASE("homology and deficiency") {
  Run h = run("homology " + corpus("z2") + " --quotient 1");
  CHECK(h.status == 0);
  CHECK(Json::parse(h.out)["betti"] == Json::parse("[1,2,1]"));
  Run d = run("deficiency " + corpus("trefoil") + " --no-certificate");
  CHECK(d.status == 0);
  Json j = Json::parse(d.out);
  CHECK(j["lower"] == 1);
  CHECK(j["upper"] == 1);
  CHECK(run("deficiency " + corpus("genus2") + " --aspherical").status == 0);
}

TEST_CASE("stability writes json and csv") {
  auto json_path = scratch("z2.json"), csv_path = scratch("z2.csv");
  Run r = run("stability " + corpus("z2") + " --max-index 3 --out " + json_path.string() + " --csv " +
              csv_path.string());
  CHECK(r.status == 0);
  std::ifstream in(json_path);
  Json j = Json::parse(in);
  for (const char* key : {"group", "presentation", "rows", "verdict", "tool_version"}) CHECK(j.contains(key));
  CHECK(j["group"] == "z2");
  CHECK(j["verdict"] == "certified-holds");
  CHECK(j["rows"].size() == 1 + 3 + 4);
  std::ifstream c(csv_path);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(c, line)) ++lines;
  CHECK(lines == 9);
  // an inconclusive verdict still exits 0
  CHECK(run("stability " + corpus("gadget_b3") + " --max-index 3").status == 0);
}

TEST_CASE("cert and modp") {
  Run c = run("cert " + corpus("gadget_b3") + " --witness " +
              std::string(DEFLAB_CORPUS_DIR) + "/gadget_b3.witness.json");
  CHECK(c.status == 0);
  Json j = Json::parse(c.out);
  CHECK(j["u"] == 1);
  Run m = run("modp " + corpus("c2") + " -p 2 --normal-index 1");
  CHECK(m.status == 0);
  CHECK(run("modp " + corpus("free2") + " -p 4 --normal-index 2").status == 1);
  // index 12 is out of reach for plain low-index search on F2
  Run big = run("modp " + corpus("free2") + " -p 2 --normal-index 12:1");
  CHECK(big.status == 0);
  CHECK(Json::parse(big.out)["euler_residual"] == 0);
}

TEST_CASE("operational errors exit 1") {
  CHECK(run("parse /nonexistent/file.pres").status == 1);
  CHECK(run("stability " + corpus("z2")).status == 1);
  auto bad = scratch("bad.pres");
  std::ofstream(bad) << "< a, b | a c >\n";
  CHECK(run("parse " + bad.string()).status == 1);
  CHECK(run("frobnicate").status == 1);
}
