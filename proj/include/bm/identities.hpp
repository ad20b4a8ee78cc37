#ifndef BM_IDENTITIES_HPP
#define BM_IDENTITIES_HPP

#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "bm/bivar_poly.hpp"
#include "bm/report.hpp"

namespace bm {

// Named polynomial store. The canonical instance comes from builders that
// mirror the printed term groupings; copies can be perturbed for fault
// injection or reloaded from the line-oriented data file.
class PolyTable {
 public:
  const BivarPoly& get(const std::string& name) const;
  void set(const std::string& name, BivarPoly p);
  const std::map<std::string, BivarPoly>& all() const { return polys_; }
  std::vector<std::string> names() const;

 private:
  std::map<std::string, BivarPoly> polys_;
};

PolyTable build_poly_table();
const PolyTable& default_table();

// `NAME e_m e_i coefficient` triples, one per line, sorted; FNV-1a checksum
// of the body on a trailing `# checksum <hex>` line.
void save_poly_table(const PolyTable& t, std::ostream& os);
PolyTable load_poly_table(std::istream& is);  // verifies the checksum

// ---- rational-function evaluators (quadratic-form coefficients etc.) ----
Rational eval_A(const PolyTable& t, long m, long i);
Rational eval_B(const PolyTable& t, long m, long i);
Rational eval_C(const PolyTable& t, long m, long i);
Rational delta1_def(const PolyTable& t, long m, long i);     // B^2 - 4AC
Rational delta1_closed(const PolyTable& t, long m, long i);  // via G, H

Rational eval_U(const PolyTable& t, long m, long i);
Rational eval_V(const PolyTable& t, long m, long i);
Rational eval_W(const PolyTable& t, long m, long i);
Rational delta2_def(const PolyTable& t, long m, long i);     // V^2 - 4UW
Rational delta2_closed(const PolyTable& t, long m, long i);  // via X

Rational eval_A1(long m, long i);  // 2(m+1)(m+1-i)
Rational eval_B1(long m, long i);  // 4m^2+7m+3-2i^2
Rational eval_C1(long m, long i);  // 4i^2+4m+1

Rational eval_D1_def(const PolyTable& t, long m, long i);
Rational eval_D1_closed(long m, long i);
Rational eval_E1_def(const PolyTable& t, long m, long i);
Rational eval_E1_closed(const PolyTable& t, long m, long i);
Rational eval_F1_def(const PolyTable& t, long m, long i);
Rational eval_F1_closed(const PolyTable& t, long m, long i);

Rational eval_Y1(long m, long i);
Rational eval_Y2(long m, long i);
Rational eval_Y3_def(const PolyTable& t, long m, long i);
Rational eval_Y3_closed(const PolyTable& t, long m, long i);
Rational eval_Y4_def(const PolyTable& t, long m, long i);
Rational eval_Y4_closed(const PolyTable& t, long m, long i);

Rational eval_Z1(const PolyTable& t, long m, long i);
Rational eval_Z2(const PolyTable& t, long m, long i);
Rational eval_Z3(const PolyTable& t, long m, long i);
Rational eval_Z4(const PolyTable& t, long m, long i);
Rational eval_Z5(const PolyTable& t, long m, long i);
Rational eval_Z6(const PolyTable& t, long m, long i);

// L(m,i) = 2 Mcore (La + Lb sqrt(4i^2+4m+1))
SurdExpr eval_L(const PolyTable& t, long m, long i);

// generic dispatch: table polynomials and the rational functions above
Rational eval_named(const PolyTable& t, const std::string& name, long m, long i);

// ---- identity testing by deterministic grid evaluation ----
struct IdentityCheck {
  std::string name;
  // returns true iff lhs - rhs == 0 at (m, i); fills *resid on mismatch
  std::function<bool(const PolyTable&, long m, long i, std::string* resid)> at_point;
  std::function<bool(long m, long i)> domain;
  long default_grid_m_max = 40;
};

const std::vector<IdentityCheck>& identity_checks();
const IdentityCheck& identity_check(const std::string& name);

VerificationReport verify_identity(const PolyTable& t, const IdentityCheck& c,
                                   long grid_m_max = 0);

// ---- sign claims on declared regions ----
struct SignClaim {
  std::string name;      // quantity, e.g. "X"
  int expected_sign;     // +1 or -1
  std::function<Rational(const PolyTable&, long m, long i)> value;
  std::function<bool(long m, long i)> domain;  // i-region at given m
  long m_min = 2;
};

const std::vector<SignClaim>& sign_claims();
const SignClaim& sign_claim(const std::string& name);

// evaluates at every admissible i for each sampled m; strict sign required;
// note records the minimum-magnitude witness
VerificationReport verify_sign_claim(const PolyTable& t, const SignClaim& c,
                                     const std::vector<long>& ms);

// L > 0 for 1 <= i <= m-1 (surd-valued, checked by exact sign)
VerificationReport verify_L_positive(const PolyTable& t, long m);

// The three-case analysis of G's positivity: per-case printed term-group
// inequalities, exact (the fractional-power bounds handled by cubing).
VerificationReport lemma32_case_structure(const PolyTable& t, long m);

}  // namespace bm

#endif
