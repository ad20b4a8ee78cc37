#ifndef BM_COEFFICIENTS_HPP
#define BM_COEFFICIENTS_HPP

#include <vector>

#include "bm/exactnum.hpp"

namespace bm {

// One coefficient row d_0(m)..d_m(m); out-of-range reads are 0.
class BorosMollRow {
 public:
  BorosMollRow(long m, std::vector<Rational> d);

  long m() const { return m_; }
  const Rational& at(long i) const;
  const std::vector<Rational>& values() const { return d_; }

 private:
  long m_;
  std::vector<Rational> d_;
};

// Single sum: d_i(m) = 2^{-2m} sum_{k=i}^m 2^k C(2m-2k,m-k) C(m+k,k) C(k,i)
BorosMollRow row_single_sum(long m);

// Double sum: expand sum_{j,k} C(2m+1,2j) C(m-j,k) C(2k+2j,k+j)
// (a+1)^j (a-1)^k / 2^{3(k+j)} by binomial convolution.
BorosMollRow row_double_sum(long m);

// d_i(m+1) = ((m+i)/(m+1)) d_{i-1}(m) + ((4m+2i+3)/(2(m+1))) d_i(m)
BorosMollRow row_next(const BorosMollRow& row);

// Residuals of the three remaining recurrences; all expected zero.
struct RecurrenceResiduals {
  std::vector<Rational> rec2;  // index i in 0..m
  std::vector<Rational> rec3;  // index i in 0..m+1
  std::vector<Rational> rec4;  // index i in 0..m+1
  bool all_zero() const;
};

// rows must be for consecutive m, m+1, m+2
RecurrenceResiduals check_recurrences(const BorosMollRow& r0,
                                      const BorosMollRow& r1,
                                      const BorosMollRow& r2);

// d_i(m+1)/d_i(m), 0 <= i <= m
Rational ratio(long m, long i);
Rational ratio(const BorosMollRow& row_m, const BorosMollRow& row_m1, long i);

// {"m": m, "den_pow2": 2m, "scaled": [2^{2m} d_i as integers]}
std::string row_to_json(const BorosMollRow& row);

}  // namespace bm

#endif
