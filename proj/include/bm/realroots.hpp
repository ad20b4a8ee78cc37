#ifndef BM_REALROOTS_HPP
#define BM_REALROOTS_HPP

#include <string>
#include <vector>

#include "bm/coefficients.hpp"
#include "bm/report.hpp"

namespace bm {

// Dense univariate polynomial, ascending coefficients, trailing zeros trimmed.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1: zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](size_t k) const { return c_[k]; }

  UniPoly derivative() const;
  UniPoly operator*(const UniPoly& o) const;

 private:
  std::vector<Rational> c_;
};

// sum d_i(m)/i! x^i, sum d_i(m)/(i+2)! x^i, and sum d_i(m) a^i
UniPoly build_Q(const BorosMollRow& row);
UniPoly build_R(const BorosMollRow& row);
UniPoly build_P(const BorosMollRow& row);

struct RootCount {
  long distinct_real = 0;
  long sqfree_degree = 0;
  bool real_rooted() const { return distinct_real == sqfree_degree; }
};

// Sturm chain over content-stripped integer polynomials: distinct real roots
// from the sign-variation difference at -inf/+inf, squarefree degree from
// deg(p) - deg(gcd(p, p')). Real-rooted iff the two agree.
RootCount count_real_roots(const UniPoly& p);

// which is 'Q', 'R' or 'P'. For Q and R, asserts real-rootedness at every
// 1 <= m <= m_max. For P, records the counts without asserting. In all modes
// verifies that whenever R_m is real-rooted, so is Q_m (derivative link).
VerificationReport conjecture_sweep(char which, long m_max);

// {"poly": "Q|R|P", "m": m, "real_roots": n, "sqfree_deg": n, "real_rooted": b}
std::string root_record_json(char which, long m, const RootCount& rc);

}  // namespace bm

#endif
