#ifndef BM_THRESHOLDS_HPP
#define BM_THRESHOLDS_HPP

#include "bm/exactnum.hpp"

namespace bm {

// Exact decisions for the cube-root case boundaries; no floating point.

// i >= m^{2/3}  <=>  i^3 >= m^2
bool i_ge_m23(long i, long m);

// i <= (m^2/2)^{1/3}  <=>  2 i^3 <= m^2
bool i_le_half_m2_cbrt(long i, long m);

// i < (m^2/2)^{1/3} - m^{1/3}, decided by integer cube-root bracketing
// with escalating precision (exact rational path when m is a perfect cube).
bool i_lt_case1_threshold(long i, long m);

// v > -2 m^{16/3}, v rational, m >= 1; exact via cubing
bool gt_neg_two_m163(const Rational& v, long m);

}  // namespace bm

#endif
