// End-to-end tests of the command-line driver. The binary path arrives in the
// QFTC_CLI environment variable (set by CTest); everything runs in a scratch
// directory under the current working directory.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

std::string cli_path() {
  const char* p = std::getenv("QFTC_CLI");
  REQUIRE_MESSAGE(p != nullptr, "QFTC_CLI must point at the CLI binary");
  return p;
}

int run_cli(const std::string& args) {
  const std::string cmd =
      cli_path() + " " + args + " > cli_tmp/stdout.log 2> cli_tmp/stderr.log";
  const int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  out << body;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Fixture {
  Fixture() {
    std::filesystem::create_directories("cli_tmp");
    write_file("cli_tmp/e0_n2.json", R"({"n":2,"real":[1,0],"imag":[0,0]})");
    write_file("cli_tmp/uniform_n4.json",
               R"({"n":4,"real":[0.5,0.5,0.5,0.5]})");
    write_file("cli_tmp/bad.json", "{nope");
    write_file("cli_tmp/spec_e0.json",
               R"({"n":4,"c_real":[1,0,0,0],"c_imag":[0,0,0,0]})");
    write_file("cli_tmp/s4.json",
               R"({"n":4,"real":[0.1259881576697424,0.8819171036881969,)"
               R"(-0.3779644730092272,0.2519763153394848]})");
  }
};

}  // namespace

TEST_CASE_FIXTURE(Fixture, "qftc on e_0 at N=2 passes with two CSV rows") {
  CHECK(run_cli("qftc --input cli_tmp/e0_n2.json --p0 3 --out cli_tmp/t1") ==
        0);
  const std::string csv = slurp("cli_tmp/t1.csv");
  CHECK(csv.rfind("k,y_exact,y_hat,abs_error,prob_mass\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);  // header + 2 rows
  const std::string manifest = slurp("cli_tmp/t1.manifest.json");
  CHECK(manifest.find("\"pass\": true") != std::string::npos);
  CHECK(manifest.find("\"sha256\"") != std::string::npos);
}

TEST_CASE_FIXTURE(Fixture, "uniform N=4 input exits 2 with a range diagnostic") {
  CHECK(run_cli("qftc --input cli_tmp/uniform_n4.json --out cli_tmp/t2") == 2);
  CHECK(slurp("cli_tmp/stderr.log").find("unrepresentable") !=
        std::string::npos);
}

TEST_CASE_FIXTURE(Fixture, "malformed JSON exits 1 with a parse error") {
  CHECK(run_cli("qftc --input cli_tmp/bad.json") == 1);
  CHECK(slurp("cli_tmp/stderr.log").find("parse error") != std::string::npos);
}

TEST_CASE_FIXTURE(Fixture, "missing flags and files exit 1") {
  CHECK(run_cli("qftc") == 1);
  CHECK(run_cli("qftc --input cli_tmp/nonexistent.json") == 1);
  CHECK(run_cli("") == 1);  // a subcommand is required
}

TEST_CASE_FIXTURE(Fixture, "reruns produce byte-identical CSV outputs") {
  CHECK(run_cli("qftc --input cli_tmp/e0_n2.json --out cli_tmp/r1") == 0);
  CHECK(run_cli("qftc --input cli_tmp/e0_n2.json --out cli_tmp/r2") == 0);
  CHECK(slurp("cli_tmp/r1.csv") == slurp("cli_tmp/r2.csv"));
  CHECK(!slurp("cli_tmp/r1.csv").empty());
}

TEST_CASE_FIXTURE(Fixture, "arith-verify adder and multiply-adder pass") {
  CHECK(run_cli("arith-verify --op adder --m 3 --n 3 --mode both "
                "--out cli_tmp/a1") == 0);
  CHECK(run_cli("arith-verify --op mul_add --m 2 --n 2 --mode both "
                "--out cli_tmp/a2") == 0);
  CHECK(run_cli("arith-verify --op sigma_minus --n 3 --mode both "
                "--out cli_tmp/a3") == 0);
}

TEST_CASE_FIXTURE(Fixture, "arith-verify refuses oversized sweeps") {
  CHECK(run_cli("arith-verify --op adder --m 10 --n 10") == 2);
  CHECK(slurp("cli_tmp/stderr.log").find("budget") != std::string::npos);
}

TEST_CASE_FIXTURE(Fixture, "circulant apply with c=e_0 reports success 1/4") {
  CHECK(run_cli("circulant apply --spec cli_tmp/spec_e0.json "
                "--state cli_tmp/s4.json --out cli_tmp/c1") == 0);
  const std::string manifest = slurp("cli_tmp/c1.manifest.json");
  const auto pos = manifest.find("\"success_prob\": ");
  REQUIRE(pos != std::string::npos);
  const double got = std::stod(manifest.substr(pos + 16));
  CHECK(std::abs(got - 0.25) < 1e-12);
}

TEST_CASE_FIXTURE(Fixture, "circulant evolve at t=0 passes") {
  CHECK(run_cli("circulant evolve --spec cli_tmp/spec_e0.json "
                "--state cli_tmp/s4.json --time 0 --out cli_tmp/c2") == 0);
  CHECK(slurp("cli_tmp/c2.manifest.json").find("\"fidelity\": 1.0") !=
        std::string::npos);
}

TEST_CASE_FIXTURE(Fixture, "bench sweeps fit the advertised slopes") {
  CHECK(run_cli("bench --sweep L --range 1:6 --out cli_tmp/b1") == 0);
  CHECK(run_cli("bench --sweep epsilon --range 2:6 --out cli_tmp/b2") == 0);
  CHECK(run_cli("bench --sweep delta --range 0:3 --out cli_tmp/b3") == 0);
  CHECK(slurp("cli_tmp/b1.manifest.json").find("\"slope\": 2.0") !=
        std::string::npos);
}

TEST_CASE_FIXTURE(Fixture, "bench refuses short or malformed ranges") {
  CHECK(run_cli("bench --sweep L --range 3:3") == 1);
  CHECK(run_cli("bench --sweep L --range nope") == 1);
  CHECK(run_cli("bench --sweep bogus --range 1:6") == 1);
}
