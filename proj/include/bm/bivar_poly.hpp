#ifndef BM_BIVAR_POLY_HPP
#define BM_BIVAR_POLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bm/exactnum.hpp"

namespace bm {

// Sparse bivariate polynomial over Int in (m, i). No zero terms stored.
class BivarPoly {
 public:
  using Key = std::pair<long, long>;  // (e_m, e_i)

  BivarPoly() = default;
  BivarPoly(long c) { add_term(c, 0, 0); }  // NOLINT(google-explicit-constructor)
  BivarPoly(const Int& c) { add_term(c, 0, 0); }  // NOLINT

  static BivarPoly var_m() { BivarPoly p; p.add_term(1, 1, 0); return p; }
  static BivarPoly var_i() { BivarPoly p; p.add_term(1, 0, 1); return p; }

  void add_term(const Int& c, long em, long ei);

  const std::map<Key, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long degree_m() const;
  long degree_i() const;
  long total_degree() const;

  BivarPoly operator+(const BivarPoly& o) const;
  BivarPoly operator-(const BivarPoly& o) const;
  BivarPoly operator*(const BivarPoly& o) const;
  BivarPoly operator-() const;
  bool operator==(const BivarPoly& o) const { return terms_ == o.terms_; }

  Int eval(const Int& m, const Int& i) const;
  Rational eval_q(const Rational& m, const Rational& i) const;

 private:
  std::map<Key, Int> terms_;
};

BivarPoly pw(const BivarPoly& p, long e);
inline BivarPoly operator*(long c, const BivarPoly& p) { return BivarPoly(c) * p; }
inline BivarPoly operator+(long c, const BivarPoly& p) { return BivarPoly(c) + p; }
inline BivarPoly operator-(long c, const BivarPoly& p) { return BivarPoly(c) - p; }

}  // namespace bm

#endif
