#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SPINPAIR_CLI_PATH) + " " + args +
                          " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    out.append(buf, got);
  }
  const int status = pclose(pipe);
  return CliResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli: phases reports the expected parity per spin") {
  const CliResult r = run_cli("phases --spins 1/2 1 --trials 5 --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"construction\": \"labeled\""));
  CHECK(contains(r.out, "\"construction\": \"symmetric\""));
  CHECK(contains(r.out, "\"spin\": \"1/2\""));
  CHECK(contains(r.out, "\"max_dev\""));
  CHECK(contains(r.out, "\"expected_phase\""));
}

TEST_CASE("cli: tsv output starts with the column header") {
  const CliResult r = run_cli("phases --spins 0 --trials 3 --output tsv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("spin\tconstruction\ttrials\texpected_re", 0) == 0);
}

TEST_CASE("cli: output is byte-identical across runs of one seed") {
  const std::string args = "phases --spins 3/2 --trials 8 --seed 42";
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const CliResult c = run_cli("phases --spins 3/2 --trials 8 --seed 43");
  CHECK(c.out != a.out);
}

TEST_CASE("cli: exclusion table marks odd totals excluded") {
  const CliResult r = run_cli("exclusion --spins 1 --output tsv");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "0\t"));
  CHECK(contains(r.out, "allowed"));
  CHECK(contains(r.out, "excluded"));
}

TEST_CASE("cli: frames emits the geometry and both rotors") {
  const CliResult r = run_cli("frames --va 1,0,0 --vb 0,1,0");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "\"theta\""));
  CHECK(contains(r.out, "\"bisecting_frames\""));
  CHECK(contains(r.out, "\"relating_rotor_plus\""));
  CHECK(contains(r.out, "\"relating_rotor_minus\""));
}

TEST_CASE("cli: degenerate directions exit with the usage code") {
  CHECK(run_cli("frames --va 1,0,0 --vb 1,0,0").exit_code == 2);
  CHECK(run_cli("frames --va 1,0,0 --vb -1,0,0").exit_code == 2);
}

TEST_CASE("cli: bad flags exit with the usage code") {
  CHECK(run_cli("phases").exit_code == 2);
  CHECK(run_cli("phases --spins 1/3").exit_code == 2);
  CHECK(run_cli("exclusion --spins 1 --sign 2").exit_code == 2);
  CHECK(run_cli("nonsense").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("cli: orderfree counts two-entity two-state collections as three") {
  const CliResult r = run_cli("orderfree --entities 2 --states 2 --output tsv");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "count\t3"));
}

TEST_CASE("cli: verify passes end to end") {
  const CliResult r = run_cli("verify --output tsv");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "ok\t"));
  CHECK(!contains(r.out, "FAIL"));
}

TEST_CASE("cli: help exits cleanly") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("phases --help").exit_code == 0);
}
