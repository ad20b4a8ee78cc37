#include "bm/thresholds.hpp"

#include <stdexcept>

namespace bm {

namespace {
Int cube(const Int& x) { return x * x * x; }
}  // namespace

bool i_ge_m23(long i, long m) { return cube(Int(i)) >= Int(m) * Int(m); }

bool i_le_half_m2_cbrt(long i, long m) {
  return 2 * cube(Int(i)) <= Int(m) * Int(m);
}

bool i_lt_case1_threshold(long i, long m) {
  // i < (m^2/2)^{1/3} - m^{1/3}  <=>  2 (i + m^{1/3})^3 < m^2
  Int M(m), I(i);
  Int b;
  if (mpz_root(b.get_mpz_t(), M.get_mpz_t(), 3)) {
    // m a perfect cube: threshold arithmetic is exact in integers
    return 2 * cube(I + b) < M * M;
  }
  // m^{1/3} irrational: bracket with scaled integer cube roots. For i >= 1
  // the quantity 2(i+m^{1/3})^3 is irrational, so the bracket resolves.
  for (unsigned long k = 16; k <= 4096; k += 16) {
    Int scaled = M << (3 * k);
    Int bk;
    mpz_root(bk.get_mpz_t(), scaled.get_mpz_t(), 3);  // floor(m^{1/3} 2^k)
    Int lo = (I << k) + bk;
    Int hi = lo + 1;
    Int rhs = (M * M) << (3 * k);
    if (2 * cube(hi) <= rhs) return true;
    if (2 * cube(lo) >= rhs) return false;
  }
  throw std::runtime_error("i_lt_case1_threshold: bracket did not resolve");
}

bool gt_neg_two_m163(const Rational& v, long m) {
  if (v >= 0) return true;
  // -v < 2 m^{16/3}  <=>  (-v)^3 < 8 m^16
  Rational lhs = -v;
  Rational cube_v = lhs * lhs * lhs;
  Int m16 = 1;
  for (int e = 0; e < 16; ++e) m16 *= m;
  return cube_v < Rational(8 * m16);
}

}  // namespace bm
