#include "bm/bounds.hpp"

#include <stdexcept>

#include "bm/thresholds.hpp"

namespace bm {

namespace {

Rational fr(const Int& num, const Int& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Int ip(long x, long e) {
  Int r = 1;
  for (long k = 0; k < e; ++k) r *= x;
  return r;
}

// L-value b_i = d_i^2 - d_{i-1} d_{i+1} with the zero convention
Rational lval(const BorosMollRow& row, long i) {
  return row.at(i) * row.at(i) - row.at(i - 1) * row.at(i + 1);
}

// weights of the representation identities
Rational w_out(long m, long i) {  // (m+1-i)(m+2-i)(m+i+2)^2
  return Rational(Int(m + 1 - i) * (m + 2 - i) * ip(m + i + 2, 2));
}
Rational w_in(long m, long i) {  // (i+1)(i+2)(m+i+3)^2
  return Rational(Int(i + 1) * (i + 2) * ip(m + i + 3, 2));
}

}  // namespace

const char* case_name(CaseLabel c) {
  switch (c) {
    case CaseLabel::Case1: return "Case1";
    case CaseLabel::Case2: return "Case2";
    case CaseLabel::Case3: return "Case3";
    case CaseLabel::Case4: return "Case4";
    case CaseLabel::Case5: return "Case5";
  }
  return "?";
}

Rational f_intermediate(long m, long i) {
  if (i < 0 || i > m) throw std::domain_error("f_intermediate: 0 <= i <= m");
  return fr(Int(i + 1) * (i + 2) * ip(m + i + 3, 2),
            Int(m + 1 - i) * (m + 2 - i) * ip(m + i + 2, 2));
}

Rational kp_lower(long m, long i) {
  if (i <= 0 || i >= m) throw std::domain_error("kp_lower: 0 < i < m");
  return fr(Int(4) * m * m + 7 * m + i + 3, 2 * Int(m + 1 - i) * (m + 1));
}

SurdExpr cg_upper(long m, long i) {
  if (i < 0 || i > m) throw std::domain_error("cg_upper: 0 <= i <= m");
  Int den = 2 * Int(m + 1) * (m + 1 - i);
  return SurdExpr(fr(Int(4) * m * m + 7 * m + 3 - 2 * i * i, den),
                  fr(i, den), Int(4) * m + 4 * i * i + 1);
}

VerificationReport check_ratio_bounds(long m) {
  VerificationReport rep;
  rep.theorem = "ratio_bounds";
  rep.m = m;
  BorosMollRow rm = row_single_sum(m);
  BorosMollRow rm1 = row_next(rm);
  for (long i = 1; i <= m - 1; ++i) {
    ++rep.checked;
    Rational r = ratio(rm, rm1, i);
    if (r < kp_lower(m, i))
      rep.fail(i, to_string(r), "below " + to_string(kp_lower(m, i)));
    if (surd_sign(cg_upper(m, i) - SurdExpr::from_rational(r)) < 0)
      rep.fail(i, to_string(r), "above the surd upper bound");
  }
  return rep;
}

QuadFormABC quad_abc(const PolyTable& t, long m, long i) {
  QuadFormABC q{eval_A(t, m, i), eval_B(t, m, i), eval_C(t, m, i)};
  if (i >= 1 && i <= m && !(q.a_coef < 0))
    throw std::logic_error("quad_abc: A(m,i) not negative");
  return q;
}

Rational delta1(const PolyTable& t, long m, long i) {
  Rational d = delta1_def(t, m, i);
  if (d != delta1_closed(t, m, i))
    throw std::logic_error("delta1: definition and closed form disagree");
  return d;
}

QuadFormUVW quad_uvw(const PolyTable& t, long m, long i) {
  QuadFormUVW q{eval_U(t, m, i), eval_V(t, m, i), eval_W(t, m, i)};
  if (i >= 1 && i <= m - 1) {
    if (!(q.u_coef > 0)) throw std::logic_error("quad_uvw: U(m,i) not positive");
    if (!(q.v_coef < 0)) throw std::logic_error("quad_uvw: V(m,i) not negative");
  }
  return q;
}

Rational delta2(const PolyTable& t, long m, long i) {
  Rational d = delta2_def(t, m, i);
  if (d != delta2_closed(t, m, i))
    throw std::logic_error("delta2: definition and closed form disagree");
  return d;
}

CaseLabel classify_case(long m, long i) {
  if (i < 1 || i > m - 1) throw std::domain_error("classify_case: 1 <= i <= m-1");
  if (i >= m - 3) return CaseLabel::Case5;
  if (i_ge_m23(i, m)) return CaseLabel::Case4;  // i <= m-4 here
  if (i_lt_case1_threshold(i, m)) return CaseLabel::Case1;
  if (i_le_half_m2_cbrt(i, m)) return CaseLabel::Case2;
  return CaseLabel::Case3;
}

bool theorem31_check(const PolyTable& t, const BorosMollRow& rm,
                     const BorosMollRow& rm1, long i) {
  long m = rm.m();
  Rational d1v = delta1(t, m, i);
  if (!(d1v > 0)) return false;  // contradicts the discriminant lemma; report
  QuadFormABC q = quad_abc(t, m, i);
  Rational r = ratio(rm, rm1, i);
  Rational e = 2 * q.a_coef * r + q.b_coef;
  SurdExpr s = SurdExpr::sqrt_of(d1v);
  // A < 0 flips the roots: need sqrt(D1) > 2Ar+B and 2Ar+B > -sqrt(D1)
  return surd_sign(s - SurdExpr::from_rational(e)) > 0 &&
         surd_sign(SurdExpr::from_rational(e) + s) > 0;
}

bool theorem14_check(const PolyTable& t, const BorosMollRow& rm,
                     const BorosMollRow& rm1, long i) {
  long m = rm.m();
  Rational direct = w_out(m, i) * lval(rm, i) - w_in(m, i) * lval(rm, i + 1);
  QuadFormABC q = quad_abc(t, m, i);
  Rational x = rm1.at(i), y = rm.at(i);
  Rational via = q.a_coef * x * x + q.b_coef * x * y + q.c_coef * y * y;
  if (direct != via)
    throw std::logic_error("theorem14_check: row route and quadratic form disagree");
  return direct > 0;
}

bool theorem15_check(const PolyTable& t, const BorosMollRow& rm,
                     const BorosMollRow& rm1, long i) {
  long m = rm.m();
  Rational direct = w_in(m, i) * lval(rm, i) - w_out(m, i) * lval(rm, i - 1);
  QuadFormUVW q = quad_uvw(t, m, i);
  Rational x = rm1.at(i), y = rm.at(i);
  Rational via = q.u_coef * x * x + q.v_coef * x * y + q.w_coef * y * y;
  if (direct != via)
    throw std::logic_error("theorem15_check: row route and quadratic form disagree");
  return direct > 0;
}

bool f_sandwich_check(const BorosMollRow& row, long i) {
  long m = row.m();
  Rational bi = lval(row, i);
  if (!(bi > 0)) return false;
  Rational f = f_intermediate(m, i);
  return f * bi - lval(row, i - 1) > 0 && bi - f * lval(row, i + 1) > 0;
}

namespace {

RootCheckOutcome root_check(const PolyTable& t, const BorosMollRow& rm,
                            const BorosMollRow& rm1, long i, bool upper) {
  long m = rm.m();
  Rational d2v = delta2(t, m, i);
  if (d2v < 0) return RootCheckOutcome::Vacuous;
  QuadFormUVW q = quad_uvw(t, m, i);
  Rational r = ratio(rm, rm1, i);
  Rational e = 2 * q.u_coef * r + q.v_coef;
  SurdExpr s = SurdExpr::sqrt_of(d2v);
  // U > 0: upper root bound is 2Ur+V < -sqrt(D2); lower is 2Ur+V > sqrt(D2)
  bool ok = upper ? surd_sign(SurdExpr::from_rational(e) + s) < 0
                  : surd_sign(SurdExpr::from_rational(e) - s) > 0;
  return ok ? RootCheckOutcome::Pass : RootCheckOutcome::Fail;
}

}  // namespace

RootCheckOutcome theorem42_check(const PolyTable& t, const BorosMollRow& rm,
                                 const BorosMollRow& rm1, long i) {
  return root_check(t, rm, rm1, i, /*upper=*/true);
}

RootCheckOutcome theorem44_check(const PolyTable& t, const BorosMollRow& rm,
                                 const BorosMollRow& rm1, long i) {
  return root_check(t, rm, rm1, i, /*upper=*/false);
}

RootCheckOutcome theorem45_check(const PolyTable& t, const BorosMollRow& rm,
                                 const BorosMollRow& rm1, long i) {
  return root_check(t, rm, rm1, i, /*upper=*/false);
}

VerificationReport theorem31_sweep(const PolyTable& t, const BorosMollRow& rm,
                                   const BorosMollRow& rm1) {
  VerificationReport rep;
  rep.theorem = "thm31";
  rep.m = rm.m();
  for (long i = 1; i <= rm.m() - 1; ++i) {
    ++rep.checked;
    if (!theorem31_check(t, rm, rm1, i)) rep.fail(i, "interval", "violated");
  }
  return rep;
}

VerificationReport theorem14_sweep(const PolyTable& t, const BorosMollRow& rm,
                                   const BorosMollRow& rm1) {
  VerificationReport rep;
  rep.theorem = "thm14";
  rep.m = rm.m();
  for (long i = 1; i <= rm.m() - 1; ++i) {
    ++rep.checked;
    if (!theorem14_check(t, rm, rm1, i)) rep.fail(i, "difference", "nonpositive");
  }
  return rep;
}

VerificationReport theorem15_sweep(const PolyTable& t, const BorosMollRow& rm,
                                   const BorosMollRow& rm1) {
  VerificationReport rep;
  rep.theorem = "thm15";
  rep.m = rm.m();
  for (long i = 1; i <= rm.m() - 1; ++i) {
    ++rep.checked;
    if (!theorem15_check(t, rm, rm1, i)) rep.fail(i, "difference", "nonpositive");
  }
  return rep;
}

VerificationReport f_sandwich_sweep(const BorosMollRow& row) {
  VerificationReport rep;
  rep.theorem = "f_sandwich";
  rep.m = row.m();
  for (long i = 1; i <= row.m() - 1; ++i) {
    ++rep.checked;
    if (!f_sandwich_check(row, i)) rep.fail(i, "sandwich", "violated");
  }
  return rep;
}

VerificationReport theorem4x_sweep(const PolyTable& t, const BorosMollRow& rm,
                                   const BorosMollRow& rm1, int which) {
  VerificationReport rep;
  long m = rm.m();
  rep.m = m;
  CaseLabel want;
  RootCheckOutcome (*check)(const PolyTable&, const BorosMollRow&,
                            const BorosMollRow&, long);
  switch (which) {
    case 42: rep.theorem = "thm42"; want = CaseLabel::Case1; check = theorem42_check; break;
    case 44: rep.theorem = "thm44"; want = CaseLabel::Case3; check = theorem44_check; break;
    case 45: rep.theorem = "thm45_ind"; want = CaseLabel::Case4; check = theorem45_check; break;
    default: throw std::invalid_argument("theorem4x_sweep: which must be 42, 44 or 45");
  }
  for (long i = 1; i <= m - 1; ++i) {
    if (classify_case(m, i) != want) continue;
    ++rep.checked;
    switch (check(t, rm, rm1, i)) {
      case RootCheckOutcome::Pass: break;
      case RootCheckOutcome::Vacuous: ++rep.skipped_vacuous; break;
      case RootCheckOutcome::Fail: rep.fail(i, "root bound", "violated"); break;
    }
  }
  return rep;
}

bool represent1_identity(const PolyTable& t, const BorosMollRow& rm,
                         const BorosMollRow& rm1, long i, std::string* resid) {
  long m = rm.m();
  Rational lhs = w_out(m, i) * lval(rm, i) - w_in(m, i) * lval(rm, i + 1);
  Rational x = rm1.at(i), y = rm.at(i);
  Rational rhs = eval_A(t, m, i) * x * x + eval_B(t, m, i) * x * y +
                 eval_C(t, m, i) * y * y;
  if (lhs == rhs) return true;
  if (resid) *resid = to_string(lhs - rhs);
  return false;
}

bool represent2_identity(const PolyTable& t, const BorosMollRow& rm,
                         const BorosMollRow& rm1, long i, std::string* resid) {
  long m = rm.m();
  Rational lhs = w_in(m, i) * lval(rm, i) - w_out(m, i) * lval(rm, i - 1);
  Rational x = rm1.at(i), y = rm.at(i);
  Rational rhs = eval_U(t, m, i) * x * x + eval_V(t, m, i) * x * y +
                 eval_W(t, m, i) * y * y;
  if (lhs == rhs) return true;
  if (resid) *resid = to_string(lhs - rhs);
  return false;
}

VerificationReport represent_identities_sweep(const PolyTable& t,
                                              const BorosMollRow& rm,
                                              const BorosMollRow& rm1) {
  VerificationReport rep;
  rep.theorem = "represent";
  rep.m = rm.m();
  std::string resid;
  for (long i = 1; i <= rm.m() - 1; ++i) {
    ++rep.checked;
    if (!represent1_identity(t, rm, rm1, i, &resid))
      rep.fail(i, "first representation", resid);
    if (!represent2_identity(t, rm, rm1, i, &resid))
      rep.fail(i, "second representation", resid);
  }
  return rep;
}

VerificationReport derived_recurrences_sweep(const BorosMollRow& rm,
                                             const BorosMollRow& rm1) {
  VerificationReport rep;
  rep.theorem = "derived_recurrences";
  long m = rm.m();
  rep.m = m;
  for (long i = 1; i <= m - 1; ++i) {
    ++rep.checked;
    Rational r1 = rm.at(i + 1) -
                  (fr(Int(4 * m - 2 * i + 3) * (m + i + 1), 2 * Int(i) * (i + 1)) * rm.at(i) -
                   fr(Int(m + 1 - i) * (m + 1), Int(i) * (i + 1)) * rm1.at(i));
    Rational r2 = rm.at(i + 2) -
                  (fr(2 * m + 1, i + 2) * rm.at(i + 1) -
                   fr(Int(m - i) * (m + i + 1), Int(i + 1) * (i + 2)) * rm.at(i));
    Rational r3 = rm.at(i - 1) -
                  (fr(m + 1, m + i) * rm1.at(i) -
                   fr(4 * m + 2 * i + 3, 2 * (m + i)) * rm.at(i));
    if (r1 != 0) rep.fail(i, "step-up recurrence", to_string(r1));
    if (r2 != 0) rep.fail(i, "double-step recurrence", to_string(r2));
    if (r3 != 0) rep.fail(i, "step-down recurrence", to_string(r3));
    if (i >= 2) {
      Rational r4 = rm.at(i - 2) -
                    (fr(Int(i - 1) * (2 * m + 1), Int(m + 2 - i) * (m + i - 1)) * rm.at(i - 1) -
                     fr(Int(i) * (i - 1), Int(m + 2 - i) * (m + i - 1)) * rm.at(i));
      if (r4 != 0) rep.fail(i, "double-step-down recurrence", to_string(r4));
    }
  }
  return rep;
}

bool g_identity_check(const PolyTable& t, const BorosMollRow& rm,
                      const BorosMollRow& rm1, std::string* resid) {
  long m = rm.m();
  if (m < 4) throw std::domain_error("g_identity_check: needs m >= 4");
  long i = m - 3;
  Rational x = rm1.at(i), y = rm.at(i);
  Rational lhs = eval_U(t, m, i) * x * x + eval_V(t, m, i) * x * y +
                 eval_W(t, m, i) * y * y;
  Int b = binomial(2 * m + 2, m + 1);
  Int num = ip(m + 1, 2) * (m - 2) * t.get("g").eval(m, 0) * b * b;
  Int den = Int(9216) * ip(2 * m + 1, 2) * ip(2 * m - 1, 2) * ip(2 * m - 3, 2);
  Rational rhs = fr(num, den * (Int(1) << (2 * m)));
  if (lhs == rhs) return true;
  if (resid) *resid = to_string(lhs - rhs);
  return false;
}

bool thm45_base_check(const PolyTable& t, long n, std::string* resid) {
  if (n < 4) throw std::domain_error("thm45_base_check: needs n >= 4");
  BorosMollRow r1 = row_single_sum(n + 1);
  BorosMollRow r2 = row_next(r1);
  long i = n - 3;

  Rational ratio_actual = r2.at(i) / r1.at(i);
  Rational ratio_closed =
      fr(Int(2 * n + 5) * (16 * ip(n, 4) + 80 * ip(n, 3) + 180 * ip(n, 2) + 240 * n + 189) * (2 * n - 1),
         10 * Int(n + 2) * (45 + 72 * Int(n) + 68 * ip(n, 2) + 48 * ip(n, 3) + 16 * ip(n, 4)));
  if (ratio_actual != ratio_closed) {
    if (resid) *resid = "ratio closed form: " + to_string(ratio_actual - ratio_closed);
    return false;
  }

  Rational u = eval_U(t, n + 1, i), v = eval_V(t, n + 1, i);
  Rational d2v = delta2_def(t, n + 1, i);
  Int den2 = 10 * Int(n + 2) * (2 * n - 3) *
             (1 + 2 * Int(n) + 33 * ip(n, 2) + 4 * ip(n, 4) - 16 * ip(n, 3));
  Rational neg_v_over_2u =
      fr(12 - 65 * Int(n) + 14 * ip(n, 2) + 3108 * ip(n, 4) - 3041 * ip(n, 3) -
             1020 * ip(n, 5) + 136 * ip(n, 6) + 16 * ip(n, 7),
         den2);
  if (-v / (2 * u) != neg_v_over_2u) {
    if (resid) *resid = "-V/(2U) closed form mismatch";
    return false;
  }
  Rational disc_closed = fr(ip(n - 1, 2) * (n - 3) * t.get("f").eval(n, 0), den2 * den2);
  if (d2v / (4 * u * u) != disc_closed) {
    if (resid) *resid = "Delta2/(2U)^2 closed form mismatch";
    return false;
  }

  // the strict base-case inequality ratio > (-V + sqrt(Delta2))/(2U);
  // vacuous where the discriminant is negative (small n)
  if (d2v >= 0) {
    Rational e = 2 * u * ratio_closed + v;
    if (surd_sign(SurdExpr::from_rational(e) - SurdExpr::sqrt_of(d2v)) <= 0) {
      if (resid) *resid = "base-case inequality not strict";
      return false;
    }
  }
  return true;
}

}  // namespace bm
