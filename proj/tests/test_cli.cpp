#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(S1FP_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof(buf), pipe)) output.append(buf, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = std::string("/tmp/s1fp_test_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

const char* kReferenceTwoPoint =
    R"({"half_dim": 3, "fixed_points": [
        {"id": "p", "weights": [1, 1, -2]},
        {"id": "q", "weights": [-1, -1, 2]}]})";

}  // namespace

TEST_CASE("check: feasible data exits 0") {
  std::string path = write_temp("tw.json", kReferenceTwoPoint);
  RunResult r = run("check " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("feasible") != std::string::npos);

  RunResult j = run("check " + path + " --json");
  CHECK(j.exit_code == 0);
  auto doc = nlohmann::json::parse(j.output);
  CHECK(doc["feasible"] == true);
  // Table and JSON agree verdict by verdict.
  for (const auto& entry : doc["constraints"])
    CHECK(r.output.find(entry["id"].get<std::string>()) != std::string::npos);
}

TEST_CASE("check: infeasible data exits 1 with a witness") {
  std::string path = write_temp(
      "single.json", R"({"half_dim": 3, "fixed_points": [{"id": "p", "weights": [1, 1, -2]}]})");
  RunResult r = run("check " + path + " --json");
  CHECK(r.exit_code == 1);
  auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["feasible"] == false);
  bool saw_ak_fail = false;
  for (const auto& entry : doc["constraints"])
    if (entry["id"] == "C-AK" && entry["verdict"] == "fail") saw_ak_fail = true;
  CHECK(saw_ak_fail);
}

TEST_CASE("check: malformed input exits 2") {
  std::string zero = write_temp(
      "zero.json", R"({"half_dim": 1, "fixed_points": [{"id": "p", "weights": [0]}]})");
  CHECK(run("check " + zero).exit_code == 2);
  std::string garbage = write_temp("garbage.json", "{nope");
  CHECK(run("check " + garbage).exit_code == 2);
  CHECK(run("check /nonexistent/file.json").exit_code == 2);
}

TEST_CASE("check: constraint subset") {
  std::string path = write_temp(
      "single2.json", R"({"half_dim": 2, "fixed_points": [{"id": "p", "weights": [1, -1]}]})");
  // C-PAR alone passes even though the full battery fails (C-AK).
  CHECK(run("check " + path).exit_code == 1);
  CHECK(run("check " + path + " --constraints C-PAR,C-AK").exit_code == 1);
  RunResult r = run("check " + path + " --constraints C-PAR --json");
  CHECK(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.output)["constraints"].size() == 1);
  CHECK(run("check " + path + " --constraints C-BOGUS").exit_code == 2);
}

TEST_CASE("integrate: golden renderings") {
  std::string tw = write_temp("tw2.json", kReferenceTwoPoint);
  CHECK(run("integrate " + tw + " --class c3").output == "2*t^0\n");
  CHECK(run("integrate " + tw + " --class 1").output == "0\n");

  std::string cp2 = write_temp("cp2.json",
                               R"({"half_dim": 2, "fixed_points": [
                                   {"id": "p0", "weights": [1, 2]},
                                   {"id": "p1", "weights": [-1, 1]},
                                   {"id": "p2", "weights": [-2, -1]}]})");
  CHECK(run("integrate " + cp2 + " --class c1^2").output == "9*t^0\n");
  CHECK(run("integrate " + cp2 + " --class bogus").exit_code == 2);
}

TEST_CASE("enumerate: streams configurations plus a summary trailer") {
  RunResult r = run("enumerate --points 1 --dim 6 --max-weight 4");
  CHECK(r.exit_code == 0);
  // Only the trailer line: zero feasible configurations.
  auto trailer = nlohmann::json::parse(r.output);
  CHECK(trailer["summary"]["feasible"] == 0);
  CHECK(trailer["summary"]["raw_candidates"] == "120");

  RunResult two = run("enumerate --points 2 --dim 6 --max-weight 3 --no-effective-filter");
  CHECK(two.exit_code == 0);
  std::istringstream lines(two.output);
  std::string line;
  int data_lines = 0;
  while (std::getline(lines, line)) {
    auto doc = nlohmann::json::parse(line);
    if (doc.contains("summary")) continue;
    ++data_lines;
    CHECK(doc["half_dim"] == 3);
  }
  CHECK(data_lines == 2);  // (a,b) in {(1,1),(1,2)}

  CHECK(run("enumerate --points 2 --dim 8 --max-weight 3").output.find("\"feasible\":0") !=
        std::string::npos);

  // Odd dimension and unknown flags are input errors.
  CHECK(run("enumerate --points 1 --dim 5 --max-weight 2").exit_code == 2);
  CHECK(run("enumerate --points 1 --dim 2 --max-weight 2 --bogus").exit_code == 2);
}

TEST_CASE("enumerate: budget exceeded exits 3 and reports the raw size") {
  RunResult r = run("enumerate --points 3 --dim 6 --max-weight 6 --budget 1000");
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("48228544") != std::string::npos);
}

TEST_CASE("lemma-multi subcommand") {
  RunResult r = run("lemma-multi --max-n 3 --max-size 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "{-2,-1,3} (a,b)=(1,2)\n{-1,-1,2} (a,b)=(1,1)\n");
}

TEST_CASE("example output round-trips through check") {
  for (const std::string& args :
       {std::string("--family sphere --params 1"), std::string("--family cpn --params 0,1,2"),
        std::string("--family product --params 'sphere:1;sphere:2'")}) {
    RunResult gen = run("example " + args);
    REQUIRE(gen.exit_code == 0);
    std::string path = write_temp("roundtrip.json", gen.output);
    CHECK(run("check " + path).exit_code == 0);
  }
  CHECK(run("example --family cpn --params 0,1,1").exit_code == 2);
  CHECK(run("example --family bogus --params 1").exit_code == 2);
}

TEST_CASE("probe subcommand") {
  RunResult r = run("probe --name no-one-point --max-dim 6 --max-weight 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("pass") != std::string::npos);
  CHECK(run("probe --name bogus --max-dim 2 --max-weight 1").exit_code == 2);
}
