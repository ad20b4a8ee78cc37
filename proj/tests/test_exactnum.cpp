#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bm/exactnum.hpp"

using namespace bm;

namespace {

std::mt19937 rng(20240817);

Rational rand_rat() {
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  return rat(num(rng), den(rng));
}

// independent sign of p + q sqrt(s): bracket sqrt(s) between consecutive
// scaled integers r/2^k <= sqrt(s) < (r+1)/2^k, widening k until decisive
int sign_by_bracketing(const Rational& p, const Rational& q, const Int& s) {
  if (q == 0 || s == 0) return sgn(p);
  for (unsigned long k = 8; k <= 256; k *= 2) {
    Int scaled = s;
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * k);
    Int r;
    mpz_sqrt(r.get_mpz_t(), scaled.get_mpz_t());
    Int pow2 = 1;
    mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), k);
    Rational lo = p + q * Rational(r, pow2);
    Rational hi = p + q * Rational(r + 1, pow2);
    lo.canonicalize();
    hi.canonicalize();
    if (q < 0) std::swap(lo, hi);
    if (sgn(lo) == sgn(hi)) return sgn(lo);
  }
  // bracket never resolves only when the value is exactly zero
  return 0;
}

}  // namespace

TEST_CASE("binomial basics") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(52, 26) == Int("495918532948104"));
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("rat canonicalizes") {
  CHECK(rat(4, 2) == rat(2));
  CHECK(rat(1, -2) == rat(-1, 2));
  CHECK(to_string(rat(-6, 4)) == "-3/2");
}

TEST_CASE("surd construction and normalization") {
  // perfect-square radicand folds into the rational part
  SurdExpr a(rat(1), rat(2), 9);
  CHECK(a.is_rational());
  CHECK(a.p == 7);

  SurdExpr z(rat(3), rat(0), 5);
  CHECK(z.is_rational());

  // sqrt(4/9) = 2/3
  CHECK(SurdExpr::sqrt_of(rat(4, 9)) == SurdExpr::from_rational(rat(2, 3)));
  // sqrt(1/2) = sqrt(2)/2
  SurdExpr h = SurdExpr::sqrt_of(rat(1, 2));
  CHECK(h.q == rat(1, 2));
  CHECK(h.s == 2);

  CHECK_THROWS_AS(SurdExpr(rat(0), rat(1), -1), std::invalid_argument);
  CHECK_THROWS_AS(SurdExpr::sqrt_of(rat(-1)), std::invalid_argument);
}

TEST_CASE("surd arithmetic with matching radicand") {
  SurdExpr r2(rat(1), rat(1), 2);  // 1 + sqrt(2)
  SurdExpr sq = r2 * r2;           // 3 + 2 sqrt(2)
  CHECK(sq.p == 3);
  CHECK(sq.q == 2);
  CHECK((r2 - r2).is_rational());
  CHECK(surd_sign(r2 - r2) == 0);

  SurdExpr r3(rat(0), rat(1), 3);
  CHECK_THROWS_AS(r2 * r3, std::invalid_argument);
}

TEST_CASE("surd_sign exact case analysis") {
  CHECK(surd_sign(SurdExpr(rat(1), rat(-1), 2)) == -1);  // 1 - sqrt(2)
  CHECK(surd_sign(SurdExpr(rat(3), rat(-1), 2)) == 1);   // 3 - sqrt(2)
  CHECK(surd_sign(SurdExpr(rat(-1), rat(1), 2)) == 1);   // sqrt(2) - 1
  CHECK(surd_sign(SurdExpr(rat(-2), rat(1), 2)) == -1);  // sqrt(2) - 2
  CHECK(surd_sign(SurdExpr(rat(0), rat(1), 2)) == 1);
  CHECK(surd_sign(SurdExpr(rat(0), rat(-1), 2)) == -1);
  CHECK(surd_sign(SurdExpr(rat(-3, 2), rat(3, 4), 4)) == 0);  // folds to 0
  CHECK(surd_sign(SurdExpr()) == 0);
}

TEST_CASE("random rational parts: sign of (p, 0, s) is sign of p") {
  std::uniform_int_distribution<long> rad(0, 1000000);
  bool ok = true;
  for (int t = 0; t < 10000; ++t) {
    Rational p = rand_rat();
    ok = ok && surd_sign(SurdExpr(p, 0, rad(rng))) == sgn(p);
  }
  CHECK(ok);
}

TEST_CASE("random surds: surd_sign agrees with integer-sqrt bracketing") {
  std::uniform_int_distribution<long> rad(0, 1000000);
  bool ok = true;
  for (int t = 0; t < 2000; ++t) {
    Rational p = rand_rat(), q = rand_rat();
    Int s(rad(rng));
    ok = ok && surd_sign(SurdExpr(p, q, s)) == sign_by_bracketing(p, q, s);
  }
  // hand-picked exact zeros exercise the fallback branch
  ok = ok && sign_by_bracketing(rat(-6), rat(3), 4) == 0 &&
       surd_sign(SurdExpr(rat(-6), rat(3), 4)) == 0;
  CHECK(ok);
}

TEST_CASE("field laws on random triples, exact equality") {
  bool ok = true;
  for (int t = 0; t < 2000; ++t) {
    Rational a = rand_rat(), b = rand_rat(), c = rand_rat();
    ok = ok && (a + b) + c == a + (b + c) && a + b == b + a &&
         (a * b) * c == a * (b * c) && a * b == b * a &&
         a * (b + c) == a * b + a * c;
  }
  // and on surds sharing a radicand
  for (int t = 0; t < 500; ++t) {
    SurdExpr a(rand_rat(), rand_rat(), 7);
    SurdExpr b(rand_rat(), rand_rat(), 7);
    SurdExpr c(rand_rat(), rand_rat(), 7);
    ok = ok && (a + b) + c == a + (b + c) && a + b == b + a &&
         a * b == b * a && a * (b + c) == a * b + a * c;
  }
  CHECK(ok);
}

TEST_CASE("surd_compare across radicands") {
  SurdExpr r2 = SurdExpr::sqrt_of(rat(2));
  SurdExpr r3 = SurdExpr::sqrt_of(rat(3));
  CHECK(surd_compare(r2, r3) == -1);
  CHECK(surd_compare(r3, r2) == 1);
  CHECK(surd_compare(r2, r2) == 0);
  // 1 + sqrt(2) vs sqrt(5): 2.414... > 2.236...
  CHECK(surd_compare(SurdExpr(rat(1), rat(1), 2), SurdExpr::sqrt_of(rat(5))) == 1);
  // -sqrt(2) > -sqrt(3)
  CHECK(surd_compare(-r2, -r3) == 1);
  // sqrt(8) == 2 sqrt(2)
  CHECK(surd_compare(SurdExpr::sqrt_of(rat(8)), SurdExpr(rat(0), rat(2), 2)) == 0);
  // rational vs surd
  CHECK(surd_compare(SurdExpr::from_rational(rat(3, 2)), r2) == 1);
  CHECK(surd_compare(SurdExpr::from_rational(rat(7, 5)), r2) == -1);
}
