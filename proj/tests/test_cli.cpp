// Exit-code and format contracts of the command line tool, driven through
// the real binary.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"

namespace {

struct CliRun {
  int exit_code = -1;
  std::string output;
};

CliRun run_cli(const std::string& args) {
  std::string cmd = std::string(K2L_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string save_graph(const std::string& name, const std::string& gen_args) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "k2l_cli_test";
  fs::create_directories(dir);
  CliRun r = run_cli("gen " + gen_args);
  std::ofstream f(dir / name);
  f << r.output;
  return (dir / name).string();
}

}  // namespace

TEST_CASE("gen emits the documented header and format") {
  CliRun r = run_cli("gen necklace 8");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("# necklace n=8\n16 32\n", 0) == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("minor-test").exit_code == 2);          // missing --ell
  CHECK(run_cli("gen zorple 4").exit_code == 2);        // unknown family
  CHECK(run_cli("gen necklace 2").exit_code == 2);      // parameter too small
  CHECK(run_cli("minor-test --ell 3 --in /nonexistent.txt").exit_code == 2);
}

TEST_CASE("definitive answers exit 0, indefinite outcomes exit 1") {
  std::string n6 = save_graph("n6.txt", "necklace 6");
  CHECK(run_cli("minor-test --ell 5 --in " + n6).exit_code == 0);
  CHECK(run_cli("minor-test --ell 4 --in " + n6).exit_code == 0);
  // tiny budget: exhaustion is not definitive
  CliRun exhausted =
      run_cli("minor-test --ell 5 --node-limit 3 --in " + n6);
  CHECK(exhausted.exit_code == 1);
  CHECK(exhausted.output.find("result: budget-exhausted") == 0);

  // saturation from the steiner engine on a wheel hub
  std::string w12 = save_graph("w12.txt", "wheel 12");
  CHECK(run_cli("minor-extract --ell 3 --engine steiner --x 12 --in " + w12)
            .exit_code == 1);
}

TEST_CASE("verify-cert rejects a tampered certificate with exit 1") {
  std::string n6 = save_graph("n6b.txt", "necklace 6");
  CliRun cert = run_cli("minor-extract --ell 4 --in " + n6);
  REQUIRE(cert.exit_code == 0);
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "k2l_cli_test";
  std::ofstream good(dir / "good.txt");
  good << cert.output;
  good.close();
  CHECK(run_cli("verify-cert --in " + n6 + " --cert " +
                (dir / "good.txt").string())
            .exit_code == 0);

  // swap the first leg for a vertex inside side B
  std::string tampered = cert.output;
  size_t pos = tampered.find("L1:");
  REQUIRE(pos != std::string::npos);
  size_t eol = tampered.find('\n', pos);
  tampered.replace(pos, eol - pos, "L1: 2");
  std::ofstream bad(dir / "bad.txt");
  bad << tampered;
  bad.close();
  CliRun r = run_cli("verify-cert --in " + n6 + " --cert " +
                     (dir / "bad.txt").string());
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("valid: false") == 0);
  CHECK(r.output.find("violation:") != std::string::npos);
}

TEST_CASE("theorem-drive honesty below the default thresholds") {
  std::string a30 = save_graph("a30.txt", "apex_necklace 30");
  // min degree 4 violates the hypothesis set
  CliRun hyp = run_cli("theorem-drive --ell 3 --in " + a30);
  CHECK(hyp.exit_code == 1);
  CHECK(hyp.output.find("INCONCLUSIVE") == 0);

  // skipping hypotheses reaches the degree branch and extracts
  CliRun minor = run_cli("theorem-drive --ell 3 --skip-hypotheses --in " + a30);
  CHECK(minor.exit_code == 0);
  CHECK(minor.output.find("MINOR") == 0);
}

TEST_CASE("audit output keys") {
  std::string gw = save_graph("gw2.txt", "gadget_wheel 2");
  CliRun r = run_cli("audit --ell 8 --in " + gw);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("n: 11\n") != std::string::npos);
  CHECK(r.output.find("m: 26\n") != std::string::npos);
  CHECK(r.output.find("min-degree: 4\n") != std::string::npos);
  CHECK(r.output.find("connectivity: 2\n") != std::string::npos);
  CHECK(r.output.find("density-ok: true\n") != std::string::npos);
}
