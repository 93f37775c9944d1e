#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mzv/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = mzv::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

const std::string kDataDir = MZV_DATA_DIR;

}  // namespace

TEST_CASE("shuffle subcommand prints the product") {
  RunResult r = run_cli({"shuffle", "AB", "AB"});
  CHECK(r.code == 0);
  CHECK(r.out.find("4·AABB") != std::string::npos);
  CHECK(r.out.find("2·ABAB") != std::string::npos);

  RunResult e = run_cli({"shuffle", "e", "AB"});
  CHECK(e.code == 0);
  CHECK(e.out.find("AB") != std::string::npos);

  RunResult bad = run_cli({"shuffle", "AB", "AXB"});
  CHECK(bad.code == 2);
}

TEST_CASE("word-level suites pass") {
  RunResult l2 = run_cli({"verify-lemma2", "--p-max", "3", "--q-max", "3"});
  CHECK(l2.code == 0);
  CHECK(l2.out.find("summary: pass=16 fail=0") != std::string::npos);

  RunResult l3 = run_cli({"verify-lemma3", "--n-max", "2"});
  CHECK(l3.code == 0);
  CHECK(l3.out.find("fail=0") != std::string::npos);
}

TEST_CASE("scalar suites pass on small grids") {
  RunResult ids = run_cli({"verify-identities", "--family", "power-odd", "--m-max", "4",
                           "--n-max", "4"});
  CHECK(ids.code == 0);
  CHECK(ids.out.find("summary: pass=16 fail=0") != std::string::npos);

  RunResult red = run_cli({"verify-reduction", "--k-max", "4", "--m-max", "4"});
  CHECK(red.code == 0);

  RunResult rcl = run_cli({"verify-rclosed", "--m-max", "3", "--n-max", "5"});
  CHECK(rcl.code == 0);
}

TEST_CASE("reference-table suite reports the single bad cell") {
  RunResult r = run_cli({"verify-initial"});
  CHECK(r.code == 1);
  CHECK(r.out.find("[FAIL] m=02,n=02:") != std::string::npos);
  CHECK(r.out.find("summary: pass=35 fail=1") != std::string::npos);
}

TEST_CASE("quiet mode hides passing cells") {
  RunResult r = run_cli({"verify-initial", "--quiet"});
  CHECK(r.code == 1);
  CHECK(r.out.find("[PASS]") == std::string::npos);
  CHECK(r.out.find("[FAIL] m=02,n=02:") != std::string::npos);
}

TEST_CASE("single-point closed-form check") {
  RunResult r = run_cli({"verify-theorem", "--m", "1", "--n", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("summary: pass=1 fail=0") != std::string::npos);
}

TEST_CASE("recurrence discovery with an order-one fit") {
  RunResult r = run_cli({"discover-recurrence", "--family", "binom-odd", "--m", "1", "--order",
                         "1", "--degree", "0", "--fit-max", "10", "--check-max", "14"});
  CHECK(r.code == 0);
  CHECK(r.out.find("c0 = 4") != std::string::npos);
  CHECK(r.out.find("c1 = 1") != std::string::npos);
  CHECK(r.out.find("fail=0") != std::string::npos);
}

TEST_CASE("certificate subcommand verifies the fixtures") {
  RunResult pascal =
      run_cli({"check-certificate", "--file", kDataDir + "/certificates/pascal_row_sum.json"});
  CHECK(pascal.code == 0);

  RunResult prop =
      run_cli({"check-certificate", "--file", kDataDir + "/certificates/proposition_m1.json"});
  CHECK(prop.code == 0);
  CHECK(prop.out.find("family=F2,check=sum-recurrence") != std::string::npos);

  RunResult missing = run_cli({"check-certificate", "--file", "/no/such/file.json"});
  CHECK(missing.code == 2);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"verify-lemma2", "--bogus"}).code == 2);
  CHECK(run_cli({"verify-identities", "--family", "nope"}).code == 2);
  CHECK(run_cli({"verify-theorem", "--m", "1"}).code == 2);
  CHECK(run_cli({"no-such-subcommand"}).code == 2);
}

TEST_CASE("JSON reports are byte-identical for identical invocations") {
  std::string p1 = "cli_report_a.json";
  std::string p2 = "cli_report_b.json";
  std::vector<std::string> base = {"check-certificate", "--file",
                                   kDataDir + "/certificates/pascal_row_sum.json", "--samples",
                                   "15", "--seed", "99"};
  std::vector<std::string> a = base;
  a.insert(a.end(), {"--json", p1});
  std::vector<std::string> b = base;
  b.insert(b.end(), {"--json", p2});
  CHECK(run_cli(a).code == 0);
  CHECK(run_cli(b).code == 0);
  std::string j1 = slurp(p1);
  std::string j2 = slurp(p2);
  CHECK(!j1.empty());
  CHECK(j1 == j2);
  CHECK(j1.find("\"suite\"") != std::string::npos);
  CHECK(j1.find("\"summary\"") != std::string::npos);
  std::remove(p1.c_str());
  std::remove(p2.c_str());
}

TEST_CASE("JSON report records failing cells") {
  std::string p = "cli_report_initial.json";
  RunResult r = run_cli({"verify-initial", "--json", p});
  CHECK(r.code == 1);
  std::string j = slurp(p);
  CHECK(j.find("\"status\": \"fail\"") != std::string::npos);
  CHECK(j.find("\"pass\": 35") != std::string::npos);
  CHECK(j.find("\"fail\": 1") != std::string::npos);
  std::remove(p.c_str());
}
