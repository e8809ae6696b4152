#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

#include "coulomb/report.hpp"

using nlohmann::json;

namespace {

std::string root() {
  const char* r = std::getenv("COULOMB_ROOT");
  REQUIRE(r != nullptr);
  return r;
}

std::string binary() {
  const char* b = std::getenv("COULOMB_BIN");
  REQUIRE(b != nullptr);
  return b;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + binary() + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string quiver(const std::string& name) {
  return root() + "/golden/quivers/" + name;
}

}  // namespace

TEST_CASE("validate command") {
  RunResult ok = run("validate --quiver " + quiver("g2.json"));
  CHECK(ok.exit_code == 0);
  json j = json::parse(ok.out);
  CHECK(j.at("checks")[0].at("status") == "pass");

  // Malformed input: missing cartan is reported by key name.
  std::string bad = "/tmp/coulomb_bad_quiver.json";
  std::ofstream(bad) << R"({"vertices":[{"id":"1","v":1}]})";
  RunResult fail = run("validate --quiver " + bad);
  CHECK(fail.exit_code == 2);
  CHECK(json::parse(fail.out).at("error").get<std::string>().find("cartan") !=
        std::string::npos);

  // Wrong value types and broken JSON exit 2 instead of crashing.
  std::ofstream(bad) << R"({"vertices":[{"id":"1","v":"x"}],"cartan":[[2]]})";
  CHECK(run("validate --quiver " + bad).exit_code == 2);
  std::ofstream(bad) << R"({"vertices": [)";
  CHECK(run("validate --quiver " + bad).exit_code == 2);
  CHECK(run("validate --quiver /tmp/does_not_exist.json").exit_code == 2);
}

TEST_CASE("monopole command output shape and determinism") {
  std::string q = quiver("b2_w01.json");
  RunResult a = run("monopole --quiver " + q + " --order 8 --bound 8", "COULOMB_THREADS=1");
  RunResult b = run("monopole --quiver " + q + " --order 8 --bound 8", "COULOMB_THREADS=7");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);  // byte-stable across thread counts
  json j = json::parse(a.out);
  CHECK(j.at("status") == "stable");
  CHECK(j.at("bound") == 8);
  CHECK(j.at("series").is_object());
  CHECK(j.at("series").at("0") == "1");
}

TEST_CASE("divergence is a finding with exit code zero") {
  std::string path = "/tmp/coulomb_divergent.json";
  std::ofstream(path) << R"({"vertices":[{"id":"1","v":1,"w":0},{"id":"2","v":1,"w":0}],
                            "cartan":[[2,-1],[-2,2]]})";
  RunResult r = run("monopole --quiver " + path + " --order 8 --bound 10");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out).at("status") == "divergent");
}

TEST_CASE("rank2 command") {
  RunResult r = run("rank2 --m 2 --check relations");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  bool found = false;
  for (const auto& c : j.at("checks"))
    if (c.at("id") == "degree-two-family") {
      found = true;
      CHECK(c.at("status") == "pass");
      CHECK(c.at("witness").at("count") == 1);  // only y11^2 = y10 y12
    }
  CHECK(found);
}

TEST_CASE("gklo command findings") {
  RunResult r = run("gklo --quiver " + quiver("a2.json") + " --check sigma");
  CHECK(r.exit_code == 0);  // non-integrality is a finding, not a failure
  json j = json::parse(r.out);
  bool note = false;
  for (const auto& c : j.at("checks"))
    if (c.at("id") == "sigma-non-integral") note = true;
  CHECK(note);
}

TEST_CASE("corpus replay") {
  RunResult r = run("corpus --dir " + root() + "/golden --text");
  INFO(r.out);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("out file and opt-in timing") {
  std::string path = "/tmp/coulomb_report_out.json";
  RunResult r = run("rank2 --m 2 --check relations --out " + path + " --timing");
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  json j = json::parse(in);
  CHECK(j.at("summary").at("failed") == 0);
  CHECK(j.contains("timing_seconds"));
  // Without the flag the canonical report has no timing field.
  RunResult bare = run("rank2 --m 2 --check relations");
  CHECK(!json::parse(bare.out).contains("timing_seconds"));
}

TEST_CASE("corpus output is byte-stable across runs") {
  RunResult a = run("corpus --dir " + root() + "/golden");
  RunResult b = run("corpus --dir " + root() + "/golden");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("corpus checks run in-process too") {
  json spec{{"id", "inline"},
            {"anchor", "rank2.m2.family"},
            {"kind", "rank2_relations"},
            {"args", {{"m", 2}}},
            {"expect", {{"all", true}, {"count", 1}}}};
  coulomb::CheckRecord rec = coulomb::run_corpus_check(spec);
  CHECK(rec.status == "pass");
}
