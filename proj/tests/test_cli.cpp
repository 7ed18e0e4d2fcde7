#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string out_path = std::string(std::tmpnam(nullptr)) + "_hf_out";
  std::string cmd = std::string(HF_CLI_BIN) + " " + args + " > " + out_path + " 2>&1";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::ostringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  std::remove(out_path.c_str());
  return r;
}

std::string data(const std::string& name) {
  return std::string(HF_TEST_DATA) + "/" + name;
}

}  // namespace

TEST_CASE("cli validate and info") {
  RunResult r = run_cli("validate " + data("s3_sphere.json"));
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["command"] == "validate");
  CHECK(j["payload"]["valid"] == true);
  CHECK(j["payload"]["nice"] == true);

  RunResult i = run_cli("info " + data("s3_torus.json"));
  CHECK(i.exit_code == 0);
  json ji = json::parse(i.out);
  CHECK(ji["payload"]["genus"] == 1);
  CHECK(ji["payload"]["b"] == 1);
}

TEST_CASE("cli homology dims") {
  RunResult r = run_cli("homology " + data("s3_sphere.json"));
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["payload"]["dim"] == 2);
  CHECK(j["payload"]["b"] == 2);

  RunResult l = run_cli("homology " + data("lens_5_2.json") + " --per-class");
  CHECK(l.exit_code == 0);
  CHECK(json::parse(l.out)["payload"]["dim"] == 5);
}

TEST_CASE("cli reports are deterministic and thread independent") {
  std::string cmd = "diff " + data("lens31_sum.json") + " --witnesses";
  RunResult a = run_cli(cmd);
  RunResult b = run_cli(cmd);
  RunResult c = run_cli("--threads 4 " + cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}

TEST_CASE("cli stable equivalence") {
  CHECK(run_cli("stable-eq " + data("s3_sphere.json") + " " + data("s3_torus.json"))
            .exit_code == 0);
  CHECK(run_cli("stable-eq " + data("s3_sphere.json") + " " + data("lens_3_1.json"))
            .exit_code == 1);
  // (F+F) summand factors never change the stable class
  CHECK(run_cli("stable-eq " + data("s3_torus.json") + " " + data("s3_torus.json") +
                " --summands1 2")
            .exit_code == 0);
  CHECK(run_cli("stable-eq " + data("s3_sphere.json") + " " + data("s3_torus.json") +
                " --summands2 1")
            .exit_code == 0);
}

TEST_CASE("cli twisted and oracle") {
  RunResult t = run_cli("twisted " + data("s3_sphere.json"));
  CHECK(t.exit_code == 0);
  json jt = json::parse(t.out);
  CHECK(jt["payload"]["classes"][0]["gf2_dim"] == 1);

  CHECK(run_cli("oracle " + data("s3_sphere.json")).exit_code == 0);
}

TEST_CASE("cli move apply") {
  std::string script_path = std::string(std::tmpnam(nullptr)) + "_moves.json";
  std::string out_path = std::string(std::tmpnam(nullptr)) + "_diagram.json";
  std::ofstream(script_path) << R"([{"type": "stab_g", "face": 0}])";
  RunResult r = run_cli("move apply " + data("s3_torus.json") + " --script " +
                        script_path + " -o " + out_path);
  CHECK(r.exit_code == 0);
  RunResult v = run_cli("validate " + out_path);
  CHECK(v.exit_code == 0);
  RunResult h = run_cli("homology " + out_path);
  CHECK(json::parse(h.out)["payload"]["dim"] == 1);
  std::remove(script_path.c_str());
  std::remove(out_path.c_str());
}

TEST_CASE("cli fuzz invariance") {
  RunResult r = run_cli("fuzz-invariance " + data("grid2.json") + " --moves 6 --seed 3");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["payload"]["ok"] == true);
  CHECK(j["payload"]["trace"].size() == 6);
}

TEST_CASE("cli error contract") {
  CHECK(run_cli("homology /nonexistent.json").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("validate").exit_code == 2);
  std::string bad_path = std::string(std::tmpnam(nullptr)) + "_bad.json";
  std::ofstream(bad_path) << "{\"alpha\": 3}";
  CHECK(run_cli("validate " + bad_path).exit_code == 2);
  std::remove(bad_path.c_str());
}
