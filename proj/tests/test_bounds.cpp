#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bm/bounds.hpp"

using namespace bm;

TEST_CASE("intermediate function values") {
  CHECK(f_intermediate(2, 1) == rat(36, 25));
  CHECK(f_intermediate(3, 1) == rat(49, 72));
  CHECK(f_intermediate(1, 0) == rat(16, 27));
  CHECK_THROWS_AS(f_intermediate(2, 3), std::domain_error);
}

TEST_CASE("ratio bound endpoints") {
  CHECK(kp_lower(2, 1) == rat(17, 6));
  CHECK(kp_lower(3, 1) == rat(61, 24));
  CHECK(kp_lower(3, 2) == rat(31, 8));
  CHECK_THROWS_AS(kp_lower(3, 0), std::domain_error);
  CHECK_THROWS_AS(kp_lower(3, 3), std::domain_error);

  SurdExpr u = cg_upper(2, 1);
  CHECK(u.p == rat(31, 12));
  CHECK(u.q == rat(1, 12));
  CHECK(u.s == 13);
  // i = 0 kills the radical and the perfect square folds away
  CHECK(cg_upper(2, 0) == SurdExpr::from_rational(rat(11, 6)));
  CHECK(cg_upper(3, 1) == SurdExpr(rat(29, 12), rat(1, 24), 17));
}

TEST_CASE("two-sided ratio bound sweeps") {
  for (long m : {2, 3, 10, 50}) {
    CAPTURE(m);
    VerificationReport rep = check_ratio_bounds(m);
    CHECK(rep.pass);
    CHECK(rep.checked == m - 1);
  }
}

TEST_CASE("first quadratic form and discriminant") {
  const PolyTable& t = default_table();
  CHECK(quad_abc(t, 5, 2).a_coef < 0);
  CHECK_NOTHROW(delta1(t, 5, 2));
  CHECK(delta1(t, 126, 1) > 0);
}

TEST_CASE("second quadratic form and discriminant") {
  const PolyTable& t = default_table();
  QuadFormUVW q = quad_uvw(t, 10, 3);
  CHECK(q.u_coef > 0);
  CHECK(q.v_coef < 0);
  CHECK_NOTHROW(delta2(t, 10, 3));
  CHECK(delta2(t, 19, 18) > 0);
  // the strip where the discriminant goes negative at m = 50:
  // (m^2/2)^{1/3} ~ 10.77, threshold ~ 7.09 -> i in {8, 9, 10}
  CHECK(delta2(t, 50, 9) < 0);
}

TEST_CASE("five-way case split") {
  CHECK(classify_case(1000, 5) == CaseLabel::Case1);
  CHECK(classify_case(1000, 69) == CaseLabel::Case1);
  CHECK(classify_case(1000, 70) == CaseLabel::Case2);
  CHECK(classify_case(1000, 79) == CaseLabel::Case2);
  CHECK(classify_case(1000, 80) == CaseLabel::Case3);
  CHECK(classify_case(1000, 99) == CaseLabel::Case3);
  CHECK(classify_case(1000, 100) == CaseLabel::Case4);
  CHECK(classify_case(1000, 996) == CaseLabel::Case4);
  CHECK(classify_case(1000, 997) == CaseLabel::Case5);
  CHECK(classify_case(1000, 998) == CaseLabel::Case5);
  CHECK(classify_case(1000, 999) == CaseLabel::Case5);
  CHECK_THROWS_AS(classify_case(1000, 0), std::domain_error);
  // the split is a partition for a spread of m
  for (long m : {5, 8, 27, 64, 100, 729}) {
    for (long i = 1; i <= m - 1; ++i) CHECK_NOTHROW(classify_case(m, i));
  }
}

TEST_CASE("root interval for the first form") {
  const PolyTable& t = default_table();
  BorosMollRow rm = row_single_sum(126);
  BorosMollRow rm1 = row_next(rm);
  CHECK(theorem31_check(t, rm, rm1, 1));
  CHECK(theorem31_check(t, rm, rm1, 63));
  CHECK(theorem31_check(t, rm, rm1, 125));
  CHECK(theorem31_sweep(t, rm, rm1).pass);
}

TEST_CASE("two-route checks for the weighted differences") {
  const PolyTable& t = default_table();
  BorosMollRow rm = row_single_sum(2);
  BorosMollRow rm1 = row_next(rm);
  for (long m = 2; m <= 40; ++m) {
    CAPTURE(m);
    CHECK(theorem14_sweep(t, rm, rm1).pass);
    CHECK(theorem15_sweep(t, rm, rm1).pass);
    CHECK(f_sandwich_sweep(rm).pass);
    CHECK(represent_identities_sweep(t, rm, rm1).pass);
    CHECK(derived_recurrences_sweep(rm, rm1).pass);
    rm = rm1;
    rm1 = row_next(rm);
  }
}

TEST_CASE("root bound checks for the second form") {
  const PolyTable& t = default_table();
  BorosMollRow rm = row_single_sum(15);
  BorosMollRow rm1 = row_next(rm);
  CHECK(theorem42_check(t, rm, rm1, 1) != RootCheckOutcome::Fail);

  BorosMollRow r100 = row_single_sum(100);
  BorosMollRow r101 = row_next(r100);
  CHECK(theorem44_check(t, r100, r101, 18) != RootCheckOutcome::Fail);
  CHECK(theorem44_check(t, r100, r101, 21) != RootCheckOutcome::Fail);
  // the strip with a negative discriminant is vacuous
  BorosMollRow r50 = row_single_sum(50);
  BorosMollRow r51 = row_next(r50);
  CHECK(theorem42_check(t, r50, r51, 9) == RootCheckOutcome::Vacuous);

  for (long m : {15, 30, 100}) {
    BorosMollRow a = row_single_sum(m);
    BorosMollRow b = row_next(a);
    CAPTURE(m);
    CHECK(theorem4x_sweep(t, a, b, 42).pass);
    CHECK(theorem4x_sweep(t, a, b, 44).pass);
  }
  BorosMollRow a = row_single_sum(273);
  BorosMollRow b = row_next(a);
  VerificationReport rep = theorem4x_sweep(t, a, b, 45);
  CHECK(rep.pass);
  CHECK(rep.checked > 0);
  CHECK(theorem45_check(t, a, b, 269) == RootCheckOutcome::Pass);
}

TEST_CASE("closed forms tied to the last inner index") {
  const PolyTable& t = default_table();
  std::string resid;
  for (long m : {4, 10, 50}) {
    CAPTURE(m);
    BorosMollRow rm = row_single_sum(m);
    BorosMollRow rm1 = row_next(rm);
    CHECK(g_identity_check(t, rm, rm1, &resid));
  }
  for (long n = 4; n <= 25; ++n) {
    CAPTURE(n);
    CHECK(thm45_base_check(t, n, &resid));
  }
}
