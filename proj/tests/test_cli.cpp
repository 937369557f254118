#include <doctest.h>

#include <fstream>
#include <sstream>

#include "projlens/cli.hpp"

using namespace projlens;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify command") {
  CliRun r = run({"classify", "--family", "E6", "--types", "1,6", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"n\":2,\"decided_by\":\"DUALITY\",\"self_opposite\":true,"
                 "\"polar_closed\":false,\"delta\":{\"2\":2,\"3\":5,\"4\":4,\"5\":3},"
                 "\"witness\":null}\n");

  // split family/rank flags are accepted too
  CliRun r2 = run({"classify", "--family", "E", "--rank", "6", "--types", "1,6", "--json"});
  CHECK(r2.out == r.out);

  CliRun r3 = run({"classify", "--family", "E8", "--types", "1,6,7"});
  CHECK(r3.code == 2);  // unresolved

  CliRun r4 = run({"classify", "--family", "Q9", "--types", "1"});
  CHECK(r4.code == 1);
}

TEST_CASE("enumerate command") {
  CliRun r = run({"enumerate", "--family", "E7", "--filter", "polar-closed"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("count 18\n", 0) == 0);

  CliRun bad = run({"enumerate", "--family", "E7", "--filter", "nope"});
  CHECK(bad.code == 1);
}

TEST_CASE("diagram command") {
  CliRun r = run({"diagram", "--family", "D4", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"nodes\":[1,2,3,4],\"edges\":[[1,2],[2,3],[2,4]],"
                 "\"family\":\"D\",\"rank\":4}\n");
}

TEST_CASE("table command emits the golden bytes") {
  CliRun r = run({"table", "--family", "D", "--rank", "6"});
  CHECK(r.code == 0);
  std::ifstream in(std::string(PROJLENS_SOURCE_DIR) + "/tests/golden/tables/D6.txt");
  REQUIRE(in.good());
  std::ostringstream golden;
  golden << in.rdbuf();
  CHECK(r.out == golden.str());
}

TEST_CASE("mcor command") {
  CliRun r = run({"mcor", "--family", "E6", "--max-rank", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("E_6: kernel {2} (unique), polar type {2} [ok]") != std::string::npos);
  CHECK(r.out.find("E_8: kernel {8}") != std::string::npos);
}

TEST_CASE("brute command") {
  CliRun r = run({"brute", "--geometry", "A2", "--q", "2", "--cotype", "2", "--budget", "60",
                  "--seed", "7", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"pi_plus_order\":6") != std::string::npos);
  // byte-stable across runs
  CliRun again = run({"brute", "--geometry", "A2", "--q", "2", "--cotype", "2", "--budget",
                      "60", "--seed", "7", "--json"});
  CHECK(again.out == r.out);
}

TEST_CASE("levi and oracle-check commands") {
  CliRun r = run({"levi", "--dim", "2", "--flag", "1", "--q", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"u_order\":4,\"opposite_flags\":4,\"sharply_transitive\":true,"
                 "\"fixes_residue\":true}\n");

  CliRun oc = run({"oracle-check", "--geometry", "A2", "--q", "2", "--samples", "50",
                   "--seed", "3"});
  CHECK(oc.code == 0);
  CHECK(oc.out.find("\"mismatches\":0") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"classify", "--types", "1"}).code == 1);  // family missing
}
