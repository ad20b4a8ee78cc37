#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "bm/identities.hpp"

using namespace bm;

TEST_CASE("table contents") {
  const PolyTable& t = default_table();
  CHECK(t.all().size() == 24);
  for (const char* n : {"D", "E_sec3", "F", "G", "H", "K", "La", "Lb", "LposW",
                        "R", "S", "T", "X", "R1", "S1", "M1", "N1", "P", "G1",
                        "H1", "Y5", "Y6", "f", "g"})
    CHECK_NOTHROW(t.get(n));
  CHECK_THROWS_AS(t.get("nope"), std::out_of_range);
  // four printed occurrences of the same quartic factor
  CHECK(t.get("R1") == t.get("M1"));
  CHECK(t.get("R1") == t.get("G1"));
  CHECK(t.get("X").degree_i() == 11);
}

TEST_CASE("spot values") {
  const PolyTable& t = default_table();
  CHECK(t.get("G").eval(10, 1) > 0);
  CHECK(eval_D1_def(t, 5, 2) == eval_D1_closed(5, 2));
  CHECK(t.get("g").eval(273, 0) > 0);
  // D(2,1) = 24+8+42+28+8+10+17+10+2+16+48+36
  CHECK(t.get("D").eval(2, 1) == 249);
  CHECK(eval_C1(3, 2) == rat(29));
}

TEST_CASE("all grid identities pass on a small grid") {
  const PolyTable& t = default_table();
  for (const auto& c : identity_checks()) {
    CAPTURE(c.name);
    CHECK(verify_identity(t, c, 12).pass);
  }
}

TEST_CASE("witness polynomial matches the squared surd parts exactly") {
  const PolyTable& t = default_table();
  BivarPoly c1;
  c1.add_term(4, 0, 2);
  c1.add_term(4, 1, 0);
  c1.add_term(1, 0, 0);
  BivarPoly lhs = t.get("Lb") * t.get("Lb") * c1 - t.get("La") * t.get("La");
  CHECK(lhs == t.get("LposW"));
}

TEST_CASE("serialization round trip with checksum") {
  std::stringstream ss;
  save_poly_table(default_table(), ss);
  PolyTable loaded = load_poly_table(ss);
  CHECK(loaded.all().size() == default_table().all().size());
  for (const auto& [name, poly] : default_table().all())
    CHECK(loaded.get(name) == poly);

  // tampering with the body breaks the checksum
  std::string text = ss.str();
  auto pos = text.find("D 0 1");
  REQUIRE(pos != std::string::npos);
  text[pos + 2] = '2';
  std::stringstream bad(text);
  CHECK_THROWS_AS(load_poly_table(bad), std::runtime_error);

  std::stringstream no_sum("D 0 1 10\n");
  CHECK_THROWS_AS(load_poly_table(no_sum), std::runtime_error);
}

TEST_CASE("committed data file matches the builders") {
  std::ifstream f(BM_DATA_FILE);
  REQUIRE(f.good());
  PolyTable t = load_poly_table(f);  // checksum verified on load
  CHECK(t.all().size() == default_table().all().size());
  for (const auto& [name, poly] : default_table().all()) CHECK(t.get(name) == poly);
}

TEST_CASE("single-coefficient fault is caught by the identity suite") {
  PolyTable t = build_poly_table();
  BivarPoly k = t.get("K");
  k.add_term(1, 0, 0);
  t.set("K", k);
  bool any_fail = false;
  for (const auto& c : identity_checks())
    if (!verify_identity(t, c, 8).pass) any_fail = true;
  CHECK(any_fail);
}

TEST_CASE("basic sign claims hold on small ranges") {
  const PolyTable& t = default_table();
  std::vector<long> small;
  for (long m = 2; m <= 40; ++m) small.push_back(m);
  for (const char* name : {"A_neg", "U_pos", "V_neg", "H", "K", "Y1", "Y2",
                           "Y3", "Y4", "D1"}) {
    CAPTURE(name);
    VerificationReport rep = verify_sign_claim(t, sign_claim(name), small);
    CHECK(rep.pass);
    CHECK(rep.checked > 0);
    CHECK_FALSE(rep.note.empty());
  }
  CHECK(verify_sign_claim(t, sign_claim("G"), {126, 127, 128}).pass);
  CHECK(verify_sign_claim(t, sign_claim("Delta1"), {126, 127}).pass);
  CHECK(verify_sign_claim(t, sign_claim("X_neg"), {50, 60, 70}).pass);
  CHECK(verify_sign_claim(t, sign_claim("X_pos"), {19, 30, 40}).pass);
  CHECK(verify_sign_claim(t, sign_claim("S1"), {15, 20, 40}).pass);
  CHECK(verify_sign_claim(t, sign_claim("N1"), {15, 20, 40}).pass);
  CHECK(verify_sign_claim(t, sign_claim("E1"), {15, 20, 40}).pass);
  CHECK(verify_sign_claim(t, sign_claim("F1"), {15, 20, 40}).pass);
  CHECK(verify_sign_claim(t, sign_claim("P"), {20, 30}).pass);
  CHECK(verify_sign_claim(t, sign_claim("g"), {273, 500}).pass);
  for (const char* name : {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6"}) {
    CAPTURE(name);
    CHECK(verify_sign_claim(t, sign_claim(name), {273, 274}).pass);
  }
}

TEST_CASE("surd-valued factor is positive") {
  const PolyTable& t = default_table();
  CHECK(verify_L_positive(t, 10).pass);
  CHECK(verify_L_positive(t, 50).pass);
}

TEST_CASE("three-case positivity structure") {
  const PolyTable& t = default_table();
  for (long m : {10, 50, 126, 127, 130, 200}) {
    CAPTURE(m);
    CHECK(lemma32_case_structure(t, m).pass);
  }
}

TEST_CASE("sign claim failure reports an exact counterexample") {
  PolyTable t = build_poly_table();
  BivarPoly h = t.get("H");
  h.add_term(Int("-99999999999"), 0, 0);
  t.set("H", h);
  VerificationReport rep = verify_sign_claim(t, sign_claim("H"), {2});
  CHECK_FALSE(rep.pass);
  CHECK_FALSE(rep.violations.empty());
}
