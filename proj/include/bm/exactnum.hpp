#ifndef BM_EXACTNUM_HPP
#define BM_EXACTNUM_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace bm {

using Int = mpz_class;
using Rational = mpq_class;  // always canonical: reduced, denominator > 0

// C(n,k); 0 when k < 0 or k > n. Rejects negative n.
Int binomial(long n, long k);

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline int sign(const Rational& r) { return sgn(r); }

inline std::string to_string(const Rational& r) { return r.get_str(); }

// Exact value p + q*sqrt(s), s a nonnegative integer radicand.
// Rational radicands are normalized at construction: sqrt(a/b) = sqrt(ab)/b.
struct SurdExpr {
  Rational p;
  Rational q;
  Int s;

  SurdExpr() : p(0), q(0), s(0) {}
  SurdExpr(Rational p_, Rational q_, Int s_);

  static SurdExpr from_rational(const Rational& r) { return SurdExpr(r, 0, 0); }
  // sqrt of a nonnegative rational, normalized to an integer radicand
  static SurdExpr sqrt_of(const Rational& x);

  bool is_rational() const { return q == 0 || s == 0; }

  // arithmetic is closed only for matching radicands (or rational operands)
  SurdExpr operator+(const SurdExpr& o) const;
  SurdExpr operator-(const SurdExpr& o) const;
  SurdExpr operator*(const SurdExpr& o) const;
  SurdExpr operator-() const { return SurdExpr(-p, -q, s); }

  bool operator==(const SurdExpr& o) const;
};

SurdExpr operator*(const Rational& c, const SurdExpr& e);
SurdExpr operator+(const Rational& c, const SurdExpr& e);

// Exact sign of p + q*sqrt(s): -1, 0, +1. Integer arithmetic only.
int surd_sign(const SurdExpr& e);

// Exact sign of a - b; radicands may differ.
int surd_compare(const SurdExpr& a, const SurdExpr& b);

}  // namespace bm

#endif
