// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks of the command-line tool. The binary path and the bundled
// data directory arrive through the environment (set by CTest).
#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

std::string cli_path() {
  const char* p = std::getenv("DPGOF_CLI");
  REQUIRE(p != nullptr);
  return p;
}

std::string data_dir() {
  const char* p = std::getenv("DPGOF_DATA_DIR");
  REQUIRE(p != nullptr);
  return p;
}

std::string temp_dir() {
  const char* p = std::getenv("TMPDIR");
  return p ? p : "/tmp";
}

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
  const std::string cmd = cli_path() + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli: bootstrap test run on the bundled dataset") {
  const std::string out_path = temp_dir() + "/dpgof_cli_report.json";
  const RunResult r = run("test " + data_dir() + "/expelled_effective.freq --stat T" +
                          " --boot-reps 60 --seed 11 --workers 2 --output " + out_path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("n = 2036") != std::string::npos);
  CHECK(r.output.find("nu_hat = 5.885") != std::string::npos);
  CHECK(r.output.find("retain H0") != std::string::npos);
  const std::string json = slurp(out_path);
  CHECK(json.find("\"nu_hat\": 5.885") != std::string::npos);
  CHECK(json.find("\"statistic\": \"T(0)\"") != std::string::npos);
}

TEST_CASE("cli: identical seeds produce byte-identical JSON reports") {
  const std::string a_path = temp_dir() + "/dpgof_cli_a.json";
  const std::string b_path = temp_dir() + "/dpgof_cli_b.json";
  const std::string base = "test " + data_dir() +
                           "/expelled_effective.freq --stat K --boot-reps 40 --seed 5 ";
  CHECK(run(base + "--workers 1 --output " + a_path).exit_code == 0);
  CHECK(run(base + "--workers 4 --output " + b_path).exit_code == 0);
  CHECK(slurp(a_path) == slurp(b_path));
}

TEST_CASE("cli: loglog reports the published slope") {
  const RunResult r = run("loglog " + data_dir() + "/expelled_ineffective.freq");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("slope = -4.31") != std::string::npos);
}

TEST_CASE("cli: sample emits raw counts that re-ingest") {
  const std::string path = temp_dir() + "/dpgof_cli_sample.txt";
  const RunResult r =
      run("sample --nu 2 --n 50 --seed 3 --output " + path);
  CHECK(r.exit_code == 0);
  const RunResult again =
      run("sample --nu 2 --n 50 --seed 3");
  CHECK(again.exit_code == 0);
  CHECK(again.output == slurp(path));  // determinism and stdout/file parity
  const RunResult ll = run("loglog " + path + " --format raw");
  CHECK(ll.exit_code == 0);
}

TEST_CASE("cli: power study from a config file") {
  const std::string cfg_path = temp_dir() + "/dpgof_cli_study.json";
  {
    std::ofstream cfg(cfg_path);
    cfg << R"({"version":1,"mc":6,"n":12,"b":20,"alpha":0.05,"seed":2,"workers":2,
      "tests":[{"stat":"K"},{"stat":"Sben"}],
      "alternatives":[{"kind":"null","nu":2.0},{"kind":"sum_du","nu":2.0,"k":2}]})";
  }
  const std::string prefix = temp_dir() + "/dpgof_cli_power";
  const RunResult r =
      run("power-study --config " + cfg_path + " --output " + prefix + " --quiet");
  CHECK(r.exit_code == 0);
  const std::string csv = slurp(prefix + ".csv");
  CHECK(csv.find("alternative,K,Sben") != std::string::npos);
  CHECK(csv.find("DPareto(2)+DU(2),") != std::string::npos);
  const std::string json = slurp(prefix + ".json");
  CHECK(json.find("\"mc\": 6") != std::string::npos);
}

TEST_CASE("cli: error classes map to distinct exit codes") {
  CHECK(run("test /nonexistent.freq").exit_code == 2);           // parse class
  const std::string zero_path = temp_dir() + "/dpgof_cli_zero.txt";
  {
    std::ofstream z(zero_path);
    z << "0\n";
  }
  CHECK(run("test " + zero_path + " --format raw").exit_code == 2);
  CHECK(run("sample --nu 0.5 --n 3").exit_code == 3);            // domain class
  CHECK(run("bogus-subcommand").exit_code == 2);                 // usage
  CHECK(run("--version").exit_code == 0);
}
