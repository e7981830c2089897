#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include <sys/wait.h>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(KOSTANT_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.output.append(buf, n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json golden(const std::string& id) {
  std::ifstream in(std::string(KOSTANT_GOLDEN_DIR) + "/" + id + ".json");
  REQUIRE(in.good());
  return json::parse(in);
}

}  // namespace

TEST_CASE("reference reports match the committed golden files") {
  const char* ids[] = {"B", "C",  "D-nonsat", "G2-sat", "G2-nonsat",
                       "F4", "E6", "E7",       "E8"};
  for (const char* id : ids) {
    CAPTURE(id);
    RunResult r = run(std::string("--json paper ") + id);
    json doc = json::parse(r.output);
    CHECK(doc == golden(id));
    CHECK(r.exit_code == (doc["verdict"] == "PARABOLIC_EXISTS" ? 0 : 2));
    // serialization round-trips
    CHECK(json::parse(doc.dump()) == doc);
  }
}

TEST_CASE("troots output") {
  RunResult r = run("troots --type B --rank 2 --parts \"[1,2]\" --signs \"++\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("4 t-roots") != std::string::npos);

  RunResult j = run("--json troots --type gl --rank 3 --parts \"[1,2];[3]\"");
  CHECK(j.exit_code == 0);
  json doc = json::parse(j.output);
  CHECK(doc["k"] == 2);
  CHECK(doc["troots"].size() == 2);
}

TEST_CASE("check verdicts drive the exit code") {
  RunResult yes = run("check --type gl --rank 3 --parts \"[1,2];[3]\" --s \"d1-d2\"");
  CHECK(yes.exit_code == 0);
  CHECK(yes.output.find("PARABOLIC_EXISTS") != std::string::npos);

  RunResult no = run("check --type B --rank 2 --parts \"[1,2]\" --s \"-d1,2d1\"");
  CHECK(no.exit_code == 2);
  CHECK(no.output.find("NO_PARABOLIC_CYCLE") != std::string::npos);

  RunResult d = run(
      "--json check --type D --rank 4 --parts \"[1,2];[3,4]\" --i0 2 "
      "--s \"d1,-2d1\" --max-degree 6");
  CHECK(d.exit_code == 2);
  json doc = json::parse(d.output);
  CHECK(doc["invariants"]["degrees"].back() == json{{"k", 6}, {"dim", 1}});
}

TEST_CASE("invalid input gives a diagnostic and exit 1") {
  RunResult bad_parts = run("troots --type B --rank 2 --parts \"[1,2\"");
  CHECK(bad_parts.exit_code == 1);
  CHECK(bad_parts.output.find("column") != std::string::npos);

  RunResult bad_root = run("check --type gl --rank 2 --parts \"[1];[2]\" --s \"d9\"");
  CHECK(bad_root.exit_code == 1);
  CHECK(bad_root.output.find("out of range") != std::string::npos);

  RunResult not_troot = run("check --type gl --rank 2 --parts \"[1];[2]\" --s \"2d1\"");
  CHECK(not_troot.exit_code == 1);
  CHECK(not_troot.output.find("not a t-root") != std::string::npos);

  RunResult bad_signs = run("troots --type B --rank 2 --parts \"[1,2]\" --signs \"+\"");
  CHECK(bad_signs.exit_code == 1);
  CHECK(bad_signs.output.find("expected 2") != std::string::npos);
}

TEST_CASE("verify sweep output is identical under --jobs") {
  RunResult serial = run("verify --max-rank 2");
  RunResult parallel = run("verify --max-rank 2 --jobs 4");
  CHECK(serial.exit_code == 0);
  CHECK(parallel.exit_code == 0);
  CHECK(serial.output == parallel.output);
  CHECK(serial.output.find("OK") != std::string::npos);
}
