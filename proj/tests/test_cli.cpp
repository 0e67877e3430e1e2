// End-to-end checks of the command-line binary: exit codes, output formats,
// and byte determinism of the JSON mode.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <string>

#include "crlie/catalog.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(CRLIE_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  RunResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string catalogs() { return crlie::default_catalog_dir(); }

}  // namespace

TEST_CASE("verify passes on su2 and reports the killing signature") {
  RunResult r = run("verify " + catalogs() + "/su2.json --checks jacobi,killing");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("(0,3,0)") != std::string::npos);
}

TEST_CASE("verify fails on the broken fixture with a witness") {
  RunResult r = run("verify " + catalogs() + "/fixtures/broken_jacobi.json --checks jacobi");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("violation at (X,Y,Z)") != std::string::npos);
}

TEST_CASE("verify exits 2 on a missing or malformed file") {
  CHECK(run("verify /nonexistent.json").exit_code == 2);
  CHECK(run("nonsense-subcommand").exit_code == 2);
}

TEST_CASE("cr report on heis3") {
  RunResult r = run("cr " + catalogs() +
                    "/heis3.json --require integrable,nondegenerate,contact,normal");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("signature (0,1,0)") != std::string::npos);
  CHECK(r.output.find("1 Z") != std::string::npos);  // Reeb field
}

TEST_CASE("cr with a non-normal deformation fails the requested assertion") {
  RunResult r = run("cr " + catalogs() + "/su2.json --k \"X + 2 i Y\" --phi \"2z\"" +
                    " --require integrable,strictly_pseudoconvex");
  CHECK(r.exit_code == 0);
  RunResult r2 = run("cr " + catalogs() + "/su2.json --k \"X + 2 i Y\" --phi \"2z\"" +
                     " --require normal");
  CHECK(r2.exit_code == 1);
  CHECK(r2.output.find("normal") != std::string::npos);
}

TEST_CASE("su build and flat subcommands") {
  CHECK(run("su build --p 1 --q 0").exit_code == 0);
  RunResult locus = run("flat locus --kind su2");
  CHECK(locus.exit_code == 0);
  CHECK(locus.output.find("{1}") != std::string::npos);
  RunResult check1 = run("flat check --kind sl2R --s 1");
  CHECK(check1.exit_code == 0);
  CHECK(check1.output.find("flat") != std::string::npos);
  RunResult check2 = run("flat check --kind sl2R --s 2");
  CHECK(check2.exit_code == 0);
  CHECK(check2.output.find("not_homomorphism") != std::string::npos);
}

TEST_CASE("classify3 lists discrepancies without failing") {
  RunResult r = run("classify3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("discrepancy") != std::string::npos);
  CHECK(r.output.find("0 failed") != std::string::npos);
}

TEST_CASE("embed subcommands") {
  RunResult r = run("embed heisenberg --m 2 --eps +- --delta 1+1i --samples 25");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("25/25") != std::string::npos);
  CHECK(run("embed su2 --samples 10").exit_code == 0);
  CHECK(run("embed sl2 --samples 10").exit_code == 0);
}

TEST_CASE("json output is schema-stable and byte-deterministic per seed") {
  std::string args = "--format json --seed 7 suite forms";
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("\"suite\"") != std::string::npos);
  CHECK(a.output.find("\"checks\"") != std::string::npos);
  CHECK(a.output.find("\"counts\"") != std::string::npos);
}

TEST_CASE("suite thm1 runs clean") {
  RunResult r = run("suite thm1");
  CHECK(r.exit_code == 0);
}
