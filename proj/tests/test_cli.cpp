#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bm/identities.hpp"

namespace {
int run(const std::string& args) {
  int rc = std::system(("./bmverify " + args + " >/dev/null 2>&1").c_str());
  return WEXITSTATUS(rc);
}
}  // namespace

TEST_CASE("exit code contract: success") {
  CHECK(run("coeffs --m-max 5") == 0);
  CHECK(run("coeffs --m-max 0") == 0);
  CHECK(run("verify --theorems 2lc --m-max 20") == 0);
  CHECK(run("verify --theorems ratio,mollmin --m-max 15") == 0);
  CHECK(run("verify --theorems identities --grid 8") == 0);
  CHECK(run("roots --which Q --m-max 8") == 0);
  CHECK(run("roots --which P --m-max 5") == 0);
  CHECK(run("depth --m-max 10 --max-k 2") == 0);
  CHECK(run("depth --sequence 1,4,6,4,1 --max-k 3") == 0);
  CHECK(run("verify --theorems 2lc --m-max 12 --format csv") == 0);
}

TEST_CASE("exit code contract: usage errors") {
  CHECK(run("bogus") == 2);
  CHECK(run("coeffs --bogus") == 2);
  CHECK(run("roots --which Z --m-max 5") == 2);
  CHECK(run("verify --format yaml") == 2);
  CHECK(run("verify --theorems nosuchtheorem") == 2);
  CHECK(run("verify --poly-file /no/such/file") == 2);
  CHECK(run("verify --jobs 0") == 2);
  CHECK(run("") == 2);
}

TEST_CASE("exit code contract: verification failure") {
  // a syntactically valid table with one wrong coefficient must exit 1
  bm::PolyTable t = bm::build_poly_table();
  bm::BivarPoly k = t.get("K");
  k.add_term(1, 0, 0);
  t.set("K", k);
  {
    std::ofstream f("polys_bad_test.txt");
    bm::save_poly_table(t, f);
  }
  CHECK(run("verify --theorems identities --grid 8 --poly-file polys_bad_test.txt") == 1);
  std::remove("polys_bad_test.txt");
}

TEST_CASE("identical config yields byte-identical reports") {
  std::remove("det_a.jsonl");
  std::remove("det_b.jsonl");
  CHECK(run("verify --theorems 2lc,ratio --m-max 12 --out det_a.jsonl") == 0);
  CHECK(run("verify --theorems 2lc,ratio --m-max 12 --out det_b.jsonl") == 0);
  std::ifstream a("det_a.jsonl"), b("det_b.jsonl");
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK_FALSE(sa.str().empty());
  std::remove("det_a.jsonl");
  std::remove("det_b.jsonl");
}

TEST_CASE("worker count does not change the report stream") {
  std::remove("jobs_a.jsonl");
  std::remove("jobs_b.jsonl");
  CHECK(run("verify --theorems 2lc,mollmin,ratio --m-max 25 --out jobs_a.jsonl") == 0);
  CHECK(run("verify --theorems 2lc,mollmin,ratio --m-max 25 --jobs 4 "
            "--out jobs_b.jsonl") == 0);
  std::ifstream a("jobs_a.jsonl"), b("jobs_b.jsonl");
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK_FALSE(sa.str().empty());
  std::remove("jobs_a.jsonl");
  std::remove("jobs_b.jsonl");
}

TEST_CASE("polynomial dump round-trips through the loader") {
  std::remove("polys_cli_test.txt");
  CHECK(run("dump-polys --out polys_cli_test.txt") == 0);
  std::ifstream f("polys_cli_test.txt");
  REQUIRE(f.good());
  bm::PolyTable t = bm::load_poly_table(f);
  CHECK(t.all().size() == bm::default_table().all().size());
  for (const auto& [name, poly] : bm::default_table().all())
    CHECK(t.get(name) == poly);
  std::remove("polys_cli_test.txt");
}

TEST_CASE("json output is one record per line") {
  std::remove("cli_out_test.jsonl");
  CHECK(run("verify --theorems mollmin --m-max 6 --out cli_out_test.jsonl") == 0);
  std::ifstream f("cli_out_test.jsonl");
  REQUIRE(f.good());
  long lines = 0;
  std::string line;
  while (std::getline(f, line)) {
    ++lines;
    CHECK(line.find("\"theorem\"") != std::string::npos);
    CHECK(line.find("\"pass\":true") != std::string::npos);
  }
  CHECK(lines == 5);  // m = 2..6
  std::remove("cli_out_test.jsonl");
}
