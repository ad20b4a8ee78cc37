#ifndef BM_BOUNDS_HPP
#define BM_BOUNDS_HPP

#include <string>

#include "bm/coefficients.hpp"
#include "bm/identities.hpp"
#include "bm/report.hpp"

namespace bm {

struct QuadFormABC {
  Rational a_coef, b_coef, c_coef;  // A < 0 on 1 <= i <= m
};

struct QuadFormUVW {
  Rational u_coef, v_coef, w_coef;  // U > 0, V < 0 on 1 <= i <= m-1
};

enum class CaseLabel { Case1, Case2, Case3, Case4, Case5 };
const char* case_name(CaseLabel c);

// (i+1)(i+2)(m+i+3)^2 / ((m+1-i)(m+2-i)(m+i+2)^2), the intermediate
// function separating consecutive quotients of the L-sequence
Rational f_intermediate(long m, long i);  // 0 <= i <= m

// lower bound (4m^2+7m+i+3)/(2(m+1-i)(m+1)) on d_i(m+1)/d_i(m), 0 < i < m
Rational kp_lower(long m, long i);

// upper bound (4m^2+7m+3-2i^2 + i sqrt(4m+4i^2+1))/(2(m+1)(m+1-i)), 0<=i<=m
SurdExpr cg_upper(long m, long i);

// kp_lower <= ratio <= cg_upper for every 0 < i < m, exact surd comparison
VerificationReport check_ratio_bounds(long m);

// A, B, C from the stored D, E, F polynomials; delta1 computes B^2-4AC and
// throws std::logic_error if it disagrees with the G/H closed form
QuadFormABC quad_abc(const PolyTable& t, long m, long i);
Rational delta1(const PolyTable& t, long m, long i);

// U, V, W from the stored R, S, T; delta2 checks the X closed form likewise
QuadFormUVW quad_uvw(const PolyTable& t, long m, long i);
Rational delta2(const PolyTable& t, long m, long i);

// five-way split of 1 <= i <= m-1 at the cube-root thresholds; Case5 then
// Case4 take precedence where ranges overlap at small m
CaseLabel classify_case(long m, long i);

// (-B+sqrt(D1))/(2A) < d_i(m+1)/d_i(m) < (-B-sqrt(D1))/(2A); A < 0 so the
// root order is flipped. Returns false (never masks) if Delta1 <= 0.
bool theorem31_check(const PolyTable& t, const BorosMollRow& rm,
                     const BorosMollRow& rm1, long i);

// difference of weighted L-values computed directly from the row and via the
// A,B,C quadratic form in (d_i(m+1), d_i(m)); throws std::logic_error if the
// two routes disagree; returns strict positivity
bool theorem14_check(const PolyTable& t, const BorosMollRow& rm,
                     const BorosMollRow& rm1, long i);

// same with the U,V,W form and the left-shifted weighted difference
bool theorem15_check(const PolyTable& t, const BorosMollRow& rm,
                     const BorosMollRow& rm1, long i);

// b_{i-1}/b_i < f(m,i) < b_i/b_{i+1} with b = L-values of the row,
// cross-multiplied (b > 0 verified first)
bool f_sandwich_check(const BorosMollRow& row, long i);

enum class RootCheckOutcome { Pass, Fail, Vacuous };

// upper-root inequality on the Case1 region (m >= 15):
// ratio < (-V - sqrt(D2))/(2U); Vacuous when Delta2 < 0
RootCheckOutcome theorem42_check(const PolyTable& t, const BorosMollRow& rm,
                                 const BorosMollRow& rm1, long i);

// lower-root inequality on the Case3 region (m >= 2):
// ratio > (-V + sqrt(D2))/(2U); Vacuous when Delta2 < 0
RootCheckOutcome theorem44_check(const PolyTable& t, const BorosMollRow& rm,
                                 const BorosMollRow& rm1, long i);

// lower-root inequality on the Case4 region (m >= 273); Delta2 > 0 there
RootCheckOutcome theorem45_check(const PolyTable& t, const BorosMollRow& rm,
                                 const BorosMollRow& rm1, long i);

// row-level sweeps; rm1 must be the row for m+1
VerificationReport theorem31_sweep(const PolyTable& t, const BorosMollRow& rm,
                                   const BorosMollRow& rm1);
VerificationReport theorem14_sweep(const PolyTable& t, const BorosMollRow& rm,
                                   const BorosMollRow& rm1);
VerificationReport theorem15_sweep(const PolyTable& t, const BorosMollRow& rm,
                                   const BorosMollRow& rm1);
VerificationReport f_sandwich_sweep(const BorosMollRow& row);
// which: 42, 44 or 45; points outside the region are skipped silently,
// Delta2 < 0 points inside the region are recorded as vacuous
VerificationReport theorem4x_sweep(const PolyTable& t, const BorosMollRow& rm,
                                   const BorosMollRow& rm1, int which);

// the two row-identity residual checks behind theorems 1.4/1.5
bool represent1_identity(const PolyTable& t, const BorosMollRow& rm,
                         const BorosMollRow& rm1, long i, std::string* resid);
bool represent2_identity(const PolyTable& t, const BorosMollRow& rm,
                         const BorosMollRow& rm1, long i, std::string* resid);
VerificationReport represent_identities_sweep(const PolyTable& t,
                                              const BorosMollRow& rm,
                                              const BorosMollRow& rm1);

// the three derived coefficient recurrences (and the fourth, left-shifted
// one) used to set up the representation identities; residuals must vanish
VerificationReport derived_recurrences_sweep(const BorosMollRow& rm,
                                             const BorosMollRow& rm1);

// quadratic form at i = m-3 equals (m+1)^2 (m-2) g(m) / (9216 (2m+1)^2
// (2m-1)^2 (2m-3)^2) * 2^{-2m} C(2m+2,m+1)^2; rm1 is the row for m+1
bool g_identity_check(const PolyTable& t, const BorosMollRow& rm,
                      const BorosMollRow& rm1, std::string* resid);

// the induction base at i = n-3: the printed closed forms for the ratio
// d_{n-3}(n+2)/d_{n-3}(n+1), for -V/(2U) and Delta2/(4U^2) at (n+1, n-3),
// and the strict surd inequality between them
bool thm45_base_check(const PolyTable& t, long n, std::string* resid);

}  // namespace bm

#endif
