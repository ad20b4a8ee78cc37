// End-to-end acceptance sweep: one pass/fail line per criterion, exit 0 only
// if every criterion passes. Everything is exact; no tolerances anywhere.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "bm/bounds.hpp"
#include "bm/coefficients.hpp"
#include "bm/identities.hpp"
#include "bm/logconcavity.hpp"
#include "bm/realroots.hpp"

using namespace bm;

namespace {

int failures = 0;
std::chrono::steady_clock::time_point t0;

void crit(int n, const char* desc, bool ok) {
  auto now = std::chrono::steady_clock::now();
  double secs = std::chrono::duration<double>(now - t0).count();
  std::printf("[%s] criterion %2d (%6.1fs): %s\n", ok ? "PASS" : "FAIL", n,
              secs, desc);
  std::fflush(stdout);
  if (!ok) ++failures;
}

}  // namespace

int main() {
  t0 = std::chrono::steady_clock::now();
  const PolyTable& table = default_table();

  // shared row cache m = 0..321, iterated recurrence with periodic cross-check
  std::vector<BorosMollRow> rows;
  rows.push_back(row_single_sum(0));
  bool rows_ok = true;
  for (long m = 1; m <= 321; ++m) {
    rows.push_back(row_next(rows.back()));
    if (m % 25 == 0 && !(rows.back().values() == row_single_sum(m).values()))
      rows_ok = false;
  }

  // 1: three independent constructions agree entrywise
  {
    bool ok = rows_ok;
    for (long m = 0; m <= 60 && ok; ++m)
      ok = rows[m].values() == row_single_sum(m).values() &&
           rows[m].values() == row_double_sum(m).values();
    crit(1, "cross-engine coefficient equality, m <= 60", ok);
  }

  // 2: the remaining three recurrences have zero residuals
  {
    bool ok = true;
    for (long m = 0; m <= 60 && ok; ++m)
      ok = check_recurrences(rows[m], rows[m + 1], rows[m + 2]).all_zero();
    crit(2, "recurrence residuals exactly zero, m <= 60", ok);
  }

  // 3: strict second-iterate log-concavity
  {
    bool ok = true;
    long first_fail = 0;
    for (long m = 2; m <= 300 && ok; ++m) {
      ok = check_2lc(rows[m]).pass;
      if (!ok) first_fail = m;
    }
    (void)first_fail;
    crit(3, "2-log-concavity, m <= 125 and extended to m = 300", ok);
  }

  // 4: second weighted-difference positivity, both routes
  {
    bool ok = true;
    for (long m = 2; m <= 272 && ok; ++m)
      ok = theorem15_sweep(table, rows[m], rows[m + 1]).pass;
    crit(4, "second quadratic-form positivity, m <= 272", ok);
  }

  // 5: first weighted-difference positivity plus the sandwich
  {
    bool ok = true;
    for (long m = 2; m <= 272 && ok; ++m)
      ok = theorem14_sweep(table, rows[m], rows[m + 1]).pass &&
           f_sandwich_sweep(rows[m]).pass;
    crit(5, "first quadratic-form positivity and intermediate-function sandwich, m <= 272", ok);
  }

  // 6: two-sided ratio bounds via exact surd comparison
  {
    bool ok = true;
    for (long m = 2; m <= 200 && ok; ++m)
      for (long i = 1; i <= m - 1 && ok; ++i) {
        Rational r = ratio(rows[m], rows[m + 1], i);
        ok = !(r < kp_lower(m, i)) &&
             surd_sign(cg_upper(m, i) - SurdExpr::from_rational(r)) >= 0;
      }
    crit(6, "lower/upper ratio bounds, 0 < i < m <= 200", ok);
  }

  // 7: weighted minimum sequence
  {
    bool ok = true;
    for (long m = 2; m <= 150 && ok; ++m) ok = moll_min(rows[m]).pass();
    crit(7, "weighted minimum at i = m with closed form, m <= 150", ok);
  }

  // 8: discriminant closed forms on the certification grid
  {
    bool ok = verify_identity(table, identity_check("delta1_closed"), 40).pass &&
              verify_identity(table, identity_check("delta2_closed"), 40).pass;
    crit(8, "discriminant closed forms certified on the 3..40 grid", ok);
  }

  // 9: full identity suite
  {
    bool ok = true;
    for (const auto& c : identity_checks()) ok = ok && verify_identity(table, c).pass;
    for (long m = 2; m <= 40 && ok; ++m)
      ok = represent_identities_sweep(table, rows[m], rows[m + 1]).pass &&
           derived_recurrences_sweep(rows[m], rows[m + 1]).pass;
    std::string resid;
    for (long m = 4; m <= 60 && ok; ++m)
      ok = g_identity_check(table, rows[m], rows[m + 1], &resid);
    for (long n = 4; n <= 40 && ok; ++n) ok = thm45_base_check(table, n, &resid);
    crit(9, "identity suite: representations, surd differences, factorizations, closed forms", ok);
  }

  // 10: sign claims and root-interval theorems on their regions
  {
    bool ok = true;
    auto claim = [&](const char* name, long lo, long hi) {
      std::vector<long> ms;
      for (long m = lo; m <= hi; ++m) ms.push_back(m);
      bool pass = verify_sign_claim(table, sign_claim(name), ms).pass;
      ok = ok && pass;
    };
    claim("Delta1", 126, 200);
    claim("G", 126, 200);
    claim("X_neg", 50, 200);
    claim("X_pos", 19, 200);
    for (const char* z : {"Z1", "Z2", "Z3", "Z4", "Z5", "Z6"}) claim(z, 273, 320);
    claim("g", 273, 1000);
    claim("f", 273, 320);
    claim("A_neg", 2, 300);
    claim("U_pos", 2, 300);
    claim("V_neg", 2, 300);
    for (long m : {126, 150, 200})
      ok = ok && theorem31_sweep(table, rows[m], rows[m + 1]).pass &&
           lemma32_case_structure(table, m).pass;
    for (long m : {15, 50, 126, 200, 320})
      ok = ok && theorem4x_sweep(table, rows[m], rows[m + 1], 42).pass;
    for (long m : {50, 126, 200, 320})
      ok = ok && theorem4x_sweep(table, rows[m], rows[m + 1], 44).pass;
    for (long m : {273, 300, 320})
      ok = ok && theorem4x_sweep(table, rows[m], rows[m + 1], 45).pass;
    for (long m : {50, 126, 200}) ok = ok && verify_L_positive(table, m).pass;
    crit(10, "sign-claim suite on declared regions", ok);
  }

  // 11: real-rootedness sweeps
  {
    bool ok = conjecture_sweep('Q', 20).pass && conjecture_sweep('R', 20).pass;
    RootCount p2 = count_real_roots(build_P(rows[2]));
    ok = ok && p2.distinct_real == 0 && p2.sqfree_degree == 2;
    crit(11, "Sturm real-root counts: factorial-scaled rows real-rooted to m = 20", ok);
  }

  // 12: fault injection, 50 seeded random perturbations
  {
    std::mt19937 rng(12345);
    bool ok = true;
    std::vector<std::string> names = default_table().names();
    for (int trial = 0; trial < 50 && ok; ++trial) {
      if (trial % 2 == 0) {
        // perturb one stored polynomial coefficient by +1
        PolyTable t = build_poly_table();
        const std::string& name = names[rng() % names.size()];
        BivarPoly p = t.get(name);
        size_t pick = rng() % p.terms().size();
        auto it = p.terms().begin();
        std::advance(it, static_cast<long>(pick));
        p.add_term(1, it->first.first, it->first.second);
        t.set(name, p);
        bool detected = false;
        for (const auto& c : identity_checks())
          if (!verify_identity(t, c, 8).pass) { detected = true; break; }
        std::string resid;
        if (!detected)
          detected = !g_identity_check(t, rows[10], rows[11], &resid) ||
                     !thm45_base_check(t, 10, &resid);
        ok = detected;
      } else {
        // perturb one row entry
        long m = 3 + static_cast<long>(rng() % 38);
        long i = static_cast<long>(rng() % (m + 1));
        std::vector<Rational> vals = rows[m].values();
        vals[static_cast<size_t>(i)] += rat(1, 3);
        BorosMollRow bad(m, vals);
        ok = !check_recurrences(rows[m - 1], bad, rows[m + 1]).all_zero();
      }
    }
    crit(12, "fault injection: 50 random single-site perturbations all detected", ok);
  }

  std::printf("%s: %d of 12 criteria failed\n", failures ? "FAIL" : "OK", failures);
  return failures ? 1 : 0;
}
