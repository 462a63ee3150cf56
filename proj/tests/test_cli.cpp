#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string stdout_text;
};

// Runs the CLI binary, capturing stdout; stderr goes to a scratch file.
RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(MODCONE_CLI_PATH) + " " + args + " 2>/tmp/modcone_cli_stderr.txt";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.stdout_text.append(buf.data(), n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

using Json = nlohmann::ordered_json;

}  // namespace

TEST_CASE("mult split reports the closed-form value") {
  RunResult r = run_cli("mult --case split --g 3 --r1 1 --r2 1");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.stdout_text);
  CHECK(j["command"] == "mult");
  CHECK(j["results"]["multiplicity"] == "2");
  CHECK(j["inputs"]["g"] == 3);
  CHECK(j["version"] == "0.1.0");
  CHECK(j["checks"][0]["status"] == "pass");
}

TEST_CASE("mult trivial-rank2") {
  RunResult r = run_cli("mult --case trivial-rank2 --g 4");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.stdout_text);
  CHECK(j["results"]["multiplicity"] == "20");
  CHECK(j["results"]["tangent_space_dim"] == 14);
}

TEST_CASE("hilbert command") {
  RunResult r = run_cli("hilbert");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.stdout_text);
  CHECK(j["results"]["degree_of_map"] == "2");
  CHECK(j["results"]["leading_coefficient"]["num"] == "1");
  CHECK(j["results"]["leading_coefficient"]["den"] == "20160");
}

TEST_CASE("theta command and its domain error") {
  RunResult ok = run_cli("theta --g 4 --h 2");
  REQUIRE(ok.exit_code == 0);
  CHECK(Json::parse(ok.stdout_text)["results"]["theta_multiplicity"] == "12");

  RunResult off = run_cli("theta --g 4 --h 0");
  CHECK(off.exit_code == 3);  // off the divisor: a distinct error, not zero
  CHECK(off.stdout_text.empty());
}

TEST_CASE("tangent-cone command") {
  RunResult r = run_cli("tangent-cone --case coble-trivial");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.stdout_text);
  CHECK(j["results"]["model"]["name"] == "coble_trivial");
  CHECK(j["results"]["model"]["presentation"]["variables"].size() == 7);

  RunResult split = run_cli("tangent-cone --case split --g 3 --r1 1 --r2 2");
  REQUIRE(split.exit_code == 0);
  CHECK(Json::parse(split.stdout_text)["results"]["cone"]["equations"].size() == 36);
}

TEST_CASE("invariants command") {
  RunResult r = run_cli("invariants --summands 3");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.stdout_text);
  CHECK(j["results"]["presentation"]["generators"].size() == 5);
  CHECK(j["results"]["presentation"]["relations"].size() == 1);
  std::string note = j["results"]["completeness_note"];
  CHECK(note.find("complete") != std::string::npos);
}

TEST_CASE("corank command shows both routes") {
  RunResult g3 = run_cli("corank --g 3");
  REQUIRE(g3.exit_code == 0);
  Json j3 = Json::parse(g3.stdout_text);
  CHECK(j3["results"]["formula"] == 1);
  CHECK(j3["results"]["bruteforce_diag"] == 1);

  // the closed formula and the contraction-map corank disagree at g = 4;
  // the report carries both values and the check fails
  RunResult g4 = run_cli("corank --g 4");
  CHECK(g4.exit_code == 1);
  Json j4 = Json::parse(g4.stdout_text);
  CHECK(j4["results"]["formula"] == 4);
  CHECK(j4["results"]["bruteforce_diag"] == 1);
  CHECK(j4["checks"][0]["status"] == "fail");

  RunResult needs_seed = run_cli("corank --g 3 --samples 2");
  CHECK(needs_seed.exit_code == 3);

  RunResult sampled = run_cli("corank --g 3 --samples 2 --seed 5");
  REQUIRE(sampled.exit_code == 0);
  Json js = Json::parse(sampled.stdout_text);
  CHECK(js["results"]["bruteforce_samples"] == Json::array({1, 1}));
}

TEST_CASE("invariants command on a two-summand quiver with arrow multiplicity") {
  RunResult r = run_cli("invariants --summands 2 --arrow-mult 2 --degree-bound 4 --x-degree-bound 4");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.stdout_text);
  CHECK(j["results"]["presentation"]["generators"].size() == 4);
  CHECK(j["results"]["presentation"]["relations"].size() == 1);
}

TEST_CASE("exit codes for bad invocations") {
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("mult --case split").exit_code == 3);        // missing --g
  CHECK(run_cli("mult --case split --g nope").exit_code == 3);
  CHECK(run_cli("mult --case bogus --g 3").exit_code == 3);
  CHECK(run_cli("verify").exit_code == 3);                   // seed is mandatory
  CHECK(run_cli("invariants --summands 1").exit_code == 3);
  CHECK(run_cli("tangent-cone --case split --g 1 --r1 1 --r2 1").exit_code == 3);
}

TEST_CASE("reports are byte-identical across runs") {
  RunResult a = run_cli("mult --case split --g 4 --r1 2 --r2 1");
  RunResult b = run_cli("mult --case split --g 4 --r1 2 --r2 1");
  REQUIRE(a.exit_code == 0);
  CHECK(a.stdout_text == b.stdout_text);

  RunResult c = run_cli("tangent-cone --case trivial-rank2 --g 4");
  RunResult d = run_cli("tangent-cone --case trivial-rank2 --g 4");
  REQUIRE(c.exit_code == 0);
  CHECK(c.stdout_text == d.stdout_text);
}
