#include "bm/exactnum.hpp"

namespace bm {

Int binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

SurdExpr::SurdExpr(Rational p_, Rational q_, Int s_)
    : p(std::move(p_)), q(std::move(q_)), s(std::move(s_)) {
  if (s < 0) throw std::invalid_argument("SurdExpr: negative radicand");
  if (q == 0 || s == 0) {
    q = 0;
    s = 0;
    return;
  }
  // fold perfect-square radicands into the rational part
  if (mpz_perfect_square_p(s.get_mpz_t())) {
    Int root;
    mpz_sqrt(root.get_mpz_t(), s.get_mpz_t());
    p += q * Rational(root);
    q = 0;
    s = 0;
  }
}

SurdExpr SurdExpr::sqrt_of(const Rational& x) {
  if (x < 0) throw std::invalid_argument("sqrt_of: negative argument");
  if (x == 0) return SurdExpr();
  const Int& n = x.get_num();
  const Int& d = x.get_den();
  return SurdExpr(0, Rational(1, d), n * d);
}

static void require_compatible(const SurdExpr& a, const SurdExpr& b) {
  if (!a.is_rational() && !b.is_rational() && a.s != b.s)
    throw std::invalid_argument("SurdExpr: mismatched radicands");
}

SurdExpr SurdExpr::operator+(const SurdExpr& o) const {
  require_compatible(*this, o);
  Int rad = is_rational() ? o.s : s;
  return SurdExpr(p + o.p, q + o.q, rad);
}

SurdExpr SurdExpr::operator-(const SurdExpr& o) const { return *this + (-o); }

SurdExpr SurdExpr::operator*(const SurdExpr& o) const {
  require_compatible(*this, o);
  Int rad = is_rational() ? o.s : s;
  return SurdExpr(p * o.p + q * o.q * Rational(rad), p * o.q + q * o.p, rad);
}

bool SurdExpr::operator==(const SurdExpr& o) const {
  if (is_rational() && o.is_rational()) return p == o.p;
  return p == o.p && q == o.q && s == o.s;
}

SurdExpr operator*(const Rational& c, const SurdExpr& e) {
  return SurdExpr(c * e.p, c * e.q, e.s);
}

SurdExpr operator+(const Rational& c, const SurdExpr& e) {
  return SurdExpr(c + e.p, e.q, e.s);
}

int surd_sign(const SurdExpr& e) {
  if (e.q == 0 || e.s == 0) return sgn(e.p);
  if (e.p == 0) return sgn(e.q);
  int sp = sgn(e.p), sq = sgn(e.q);
  if (sp == sq) return sp;
  // opposite signs: compare p^2 vs q^2*s
  Rational diff = e.p * e.p - e.q * e.q * Rational(e.s);
  int d = sgn(diff);
  // |p| > |q|sqrt(s)  <=>  p^2 > q^2 s, so p's sign wins
  return d == 0 ? 0 : (d > 0 ? sp : sq);
}

int surd_compare(const SurdExpr& a, const SurdExpr& b) {
  // same radicand (or either rational): a single surd_sign decides
  if (a.is_rational() || b.is_rational() || a.s == b.s)
    return surd_sign(a - b);
  // distinct radicands: sign of (p + q_a sqrt(s_a)) - q_b sqrt(s_b)
  SurdExpr lhs(a.p - b.p, a.q, a.s);
  SurdExpr rhs(0, b.q, b.s);
  int sl = surd_sign(lhs), sr = surd_sign(rhs);
  if (sl != sr) return sl > sr ? 1 : (sl < sr ? -1 : 0);
  if (sl == 0) return 0;
  // both same nonzero sign: compare squares (lhs^2 keeps radicand s_a)
  SurdExpr sq_diff = lhs * lhs - SurdExpr::from_rational(rhs.q * rhs.q *
                                                         Rational(rhs.s));
  int d = surd_sign(sq_diff);
  return sl > 0 ? d : -d;
}

}  // namespace bm
