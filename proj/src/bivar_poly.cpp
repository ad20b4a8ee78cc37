#include "bm/bivar_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace bm {

void BivarPoly::add_term(const Int& c, long em, long ei) {
  if (c == 0) return;
  Key k{em, ei};
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

long BivarPoly::degree_m() const {
  long d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

long BivarPoly::degree_i() const {
  long d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.second);
  return d;
}

long BivarPoly::total_degree() const {
  long d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
  BivarPoly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(c, k.first, k.second);
  return r;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const {
  BivarPoly r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(-c, k.first, k.second);
  return r;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
  BivarPoly r;
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_)
      r.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
  return r;
}

Int BivarPoly::eval(const Int& m, const Int& i) const {
  // Horner in m over cached i-powers
  long di = degree_i();
  std::vector<Int> ipow(static_cast<size_t>(di) + 1);
  ipow[0] = 1;
  for (long e = 1; e <= di; ++e) ipow[static_cast<size_t>(e)] = ipow[static_cast<size_t>(e - 1)] * i;

  long dm = degree_m();
  std::vector<Int> by_m(static_cast<size_t>(dm) + 1, Int(0));
  for (const auto& [k, c] : terms_)
    by_m[static_cast<size_t>(k.first)] += c * ipow[static_cast<size_t>(k.second)];
  Int acc = 0;
  for (long e = dm; e >= 0; --e) acc = acc * m + by_m[static_cast<size_t>(e)];
  return acc;
}

Rational BivarPoly::eval_q(const Rational& m, const Rational& i) const {
  Rational acc(0);
  for (const auto& [k, c] : terms_) {
    Rational t(c);
    for (long e = 0; e < k.first; ++e) t *= m;
    for (long e = 0; e < k.second; ++e) t *= i;
    acc += t;
  }
  return acc;
}

BivarPoly pw(const BivarPoly& p, long e) {
  if (e < 0) throw std::invalid_argument("pw: negative exponent");
  BivarPoly r(1);
  for (long k = 0; k < e; ++k) r = r * p;
  return r;
}

}  // namespace bm
