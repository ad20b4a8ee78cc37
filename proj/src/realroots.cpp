#include "bm/realroots.hpp"

#include <json.hpp>
#include <stdexcept>

namespace bm {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly{};
  std::vector<Rational> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = rat(static_cast<long>(k)) * c_[k];
  return UniPoly(std::move(d));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return UniPoly{};
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t a = 0; a < c_.size(); ++a)
    for (size_t b = 0; b < o.c_.size(); ++b) r[a + b] += c_[a] * o.c_[b];
  return UniPoly(std::move(r));
}

UniPoly build_Q(const BorosMollRow& row) {
  std::vector<Rational> c(static_cast<size_t>(row.m()) + 1);
  Int fact = 1;
  for (long i = 0; i <= row.m(); ++i) {
    if (i > 0) fact *= i;
    c[static_cast<size_t>(i)] = row.at(i) / Rational(fact);
  }
  return UniPoly(std::move(c));
}

UniPoly build_R(const BorosMollRow& row) {
  std::vector<Rational> c(static_cast<size_t>(row.m()) + 1);
  Int fact = 2;  // (0+2)!
  for (long i = 0; i <= row.m(); ++i) {
    if (i > 0) fact *= (i + 2);
    c[static_cast<size_t>(i)] = row.at(i) / Rational(fact);
  }
  return UniPoly(std::move(c));
}

UniPoly build_P(const BorosMollRow& row) {
  return UniPoly(row.values());
}

namespace {

// integer polynomial, ascending, leading nonzero, positive content stripped
using IPoly = std::vector<Int>;

IPoly to_primitive(const UniPoly& p) {
  Int lcm_den = 1;
  for (const auto& c : p.coeffs()) lcm_den = lcm(lcm_den, c.get_den());
  IPoly r(p.coeffs().size());
  Int content = 0;
  for (size_t k = 0; k < r.size(); ++k) {
    r[k] = p.coeffs()[k].get_num() * (lcm_den / p.coeffs()[k].get_den());
    content = gcd(content, r[k]);
  }
  if (content > 1)
    for (auto& c : r) c /= content;
  return r;
}

void strip_content(IPoly& p) {
  Int content = 0;
  for (const auto& c : p) content = gcd(content, c);
  if (content > 1)
    for (auto& c : p) c /= content;
}

// remainder of a by b computed over rationals, returned as a sign-preserving
// primitive integer polynomial (content stripping keeps the sign pattern)
IPoly prim_rem(const IPoly& a, const IPoly& b) {
  std::vector<Rational> r(a.size());
  for (size_t k = 0; k < a.size(); ++k) r[k] = Rational(a[k]);
  size_t db = b.size() - 1;
  Rational blead(b.back());
  while (r.size() >= b.size()) {
    Rational q = r.back() / blead;
    size_t shift = r.size() - 1 - db;
    for (size_t k = 0; k < db; ++k) r[shift + k] -= q * Rational(b[k]);
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  // clear denominators with a positive multiplier, then strip content
  Int lcm_den = 1;
  for (const auto& c : r) lcm_den = lcm(lcm_den, c.get_den());
  IPoly out(r.size());
  for (size_t k = 0; k < r.size(); ++k)
    out[k] = r[k].get_num() * (lcm_den / r[k].get_den());
  strip_content(out);
  return out;
}

int sign_at_inf(const IPoly& p, bool positive_inf) {
  int s = sgn(p.back());
  if (!positive_inf && (p.size() - 1) % 2 == 1) s = -s;
  return s;
}

long variations(const std::vector<IPoly>& chain, bool positive_inf) {
  long v = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s = sign_at_inf(p, positive_inf);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

RootCount count_real_roots(const UniPoly& p) {
  if (p.degree() < 1) throw std::domain_error("count_real_roots: need degree >= 1");
  std::vector<IPoly> chain;
  chain.push_back(to_primitive(p));
  chain.push_back(to_primitive(p.derivative()));
  while (chain.back().size() > 0) {
    const IPoly& a = chain[chain.size() - 2];
    const IPoly& b = chain.back();
    if (b.size() == 1) break;  // constant: gcd(p, p') is trivial
    IPoly r = prim_rem(a, b);
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  RootCount rc;
  rc.distinct_real = variations(chain, false) - variations(chain, true);
  // last chain element is gcd(p, p') up to sign and content
  long gcd_deg = static_cast<long>(chain.back().size()) - 1;
  rc.sqfree_degree = p.degree() - gcd_deg;
  return rc;
}

VerificationReport conjecture_sweep(char which, long m_max) {
  VerificationReport rep;
  rep.theorem = std::string("real_roots_") + which;
  rep.m = m_max;
  BorosMollRow row = row_single_sum(1);
  for (long m = 1; m <= m_max; ++m) {
    if (m > 1) row = row_next(row);
    if (m % 25 == 0 && !(row.values() == row_single_sum(m).values()))
      rep.fail(0, "m=" + std::to_string(m), "recurrence drifted from single sum");
    ++rep.checked;
    UniPoly p = which == 'Q' ? build_Q(row)
              : which == 'R' ? build_R(row)
                             : build_P(row);
    RootCount rc = count_real_roots(p);
    if ((which == 'Q' || which == 'R') && !rc.real_rooted())
      rep.fail(0, "m=" + std::to_string(m),
               std::to_string(rc.distinct_real) + " of " +
                   std::to_string(rc.sqfree_degree) + " roots real");
    if (which == 'R' && rc.real_rooted()) {
      // derivative link: R_m real-rooted forces Q_m real-rooted
      RootCount q = count_real_roots(build_Q(row));
      if (!q.real_rooted())
        rep.fail(0, "m=" + std::to_string(m), "derivative link broken");
    }
  }
  return rep;
}

std::string root_record_json(char which, long m, const RootCount& rc) {
  nlohmann::json j;
  j["poly"] = std::string(1, which);
  j["m"] = m;
  j["real_roots"] = rc.distinct_real;
  j["sqfree_deg"] = rc.sqfree_degree;
  j["real_rooted"] = rc.real_rooted();
  return j.dump();
}

}  // namespace bm
