#include <catch_amalgamated.hpp>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#ifndef TWH_CLI_PATH
#error "TWH_CLI_PATH must point at the twh binary"
#endif
#ifndef TWH_GOLDEN_DIR
#error "TWH_GOLDEN_DIR must point at tests/golden"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(TWH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), out};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(TWH_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("hurwitz subcommand runs all three models and compares them") {
  RunResult r = run_cli("hurwitz --m 2 --lambda 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "h(m=2, lambda=[3]) enumerate = 16\n"
        "h(m=2, lambda=[3]) cutjoin = 16\n"
        "h(m=2, lambda=[3]) zonal = 16\n"
        "AGREE\n");
}

TEST_CASE("hurwitz subcommand prints fractional values for a single model") {
  RunResult r = run_cli("hurwitz --m 0 --lambda 1,1 --method cutjoin");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "h(m=0, lambda=[1,1]) cutjoin = 1/2\n");
}

TEST_CASE("table text output matches the golden file and is deterministic") {
  RunResult a = run_cli("table --n-max 3 --m-max 2");
  RunResult b = run_cli("table --n-max 3 --m-max 2");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == golden("table_n3_m2.txt"));
}

TEST_CASE("table json output matches the golden file and round-trips") {
  RunResult r = run_cli("table --n-max 3 --m-max 2 --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("table_n3_m2.json"));
  auto parsed = nlohmann::ordered_json::parse(r.out);
  CHECK(parsed.dump(2) + "\n" == r.out);

  RunResult small = run_cli("table --n-max 1 --m-max 3 --format json");
  auto rows = nlohmann::ordered_json::parse(small.out);
  REQUIRE(rows.size() == 4);
  for (int m = 0; m <= 3; ++m) {
    CHECK(rows[m]["n"] == 1);
    CHECK(rows[m]["m"] == m);
    CHECK(rows[m]["lambda"] == nlohmann::ordered_json::array({1}));
    CHECK(rows[m]["value"]["num"] == (m == 0 ? "1" : "0"));
    CHECK(rows[m]["value"]["den"] == "1");
  }
}

TEST_CASE("surface report for the moebius word matches the golden file") {
  RunResult r = run_cli("surface --n 3 --word 'G[1,2]^{++};G[2,3]^{++};G[1,3]^{+-}'");
  CHECK(r.exit_code == 0);
  CHECK(r.out == golden("surface_moebius.json"));
  auto rep = nlohmann::ordered_json::parse(r.out);
  CHECK(rep["cover_boundary_permutation"] == "(1 6 5)(2 3 4)");
  CHECK(rep["boundary_type"] == nlohmann::ordered_json::array({3}));
  CHECK(rep["cover_boundary_type"] == nlohmann::ordered_json::array({3, 3}));
  REQUIRE(rep["components"].size() == 1);
  CHECK(rep["components"][0]["classification"] == "1 cross-cap, 1 boundary circle");
  CHECK(rep["components"][0]["euler_characteristic"] == 0);
  CHECK(rep["components"][0]["orientable"] == false);
}

TEST_CASE("jack subcommand prints the expansion with its invariants") {
  RunResult r = run_cli("jack --lambda 2 --alpha 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "J[2] alpha=1 = 1 * p[2] + 1 * p[1,1]\n"
        "eigenvalue = 2\n"
        "hook_product = 2\n"
        "hook_product_prime = 2\n");
}

TEST_CASE("zonal subcommand prints the doubled expansion") {
  RunResult r = run_cli("zonal --lambda 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "Z[2] = 2 * p[2] + 1 * p[1,1]\n"
        "eigenvalue = 4\n"
        "hook_product = 3\n"
        "hook_product_prime = 8\n");
}

TEST_CASE("selfcheck quick level passes") {
  RunResult r = run_cli("selfcheck");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("ok moebius classification") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("selfcheck: all passed\n") != std::string::npos);
}

TEST_CASE("matrix subcommand agrees between formula and direct count") {
  RunResult r = run_cli("matrix --n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("CJ[3 -> 2,1] formula=6 direct=6") != std::string::npos);
  CHECK(r.out.rfind("MATCH\n") == r.out.size() - 6);
}

TEST_CASE("invalid inputs exit with code 2") {
  CHECK(run_cli("hurwitz --m 1 --lambda 0").exit_code == 2);
  CHECK(run_cli("surface --n 2 --word 'G[1,3]^{++}'").exit_code == 2);
  CHECK(run_cli("table --n-max 0 --m-max 1").exit_code == 2);
  CHECK(run_cli("hurwitz --m 1 --lambda 2 --bogus").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("exhausted enumeration budget exits with code 3") {
  CHECK(run_cli("hurwitz --m 4 --lambda 2,2 --max-work 10 --method enumerate").exit_code == 3);
}

TEST_CASE("help exits cleanly") {
  RunResult r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("hurwitz") != std::string::npos);
}
