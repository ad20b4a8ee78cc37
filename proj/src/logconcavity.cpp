#include "bm/logconcavity.hpp"

#include <stdexcept>

namespace bm {

namespace {
Rational at0(const RatSequence& s, long i) {
  if (i < 0 || i >= static_cast<long>(s.size())) return Rational(0);
  return s[static_cast<size_t>(i)];
}
}  // namespace

RatSequence l_operator(const RatSequence& s) {
  RatSequence b(s.size());
  for (long i = 0; i < static_cast<long>(s.size()); ++i)
    b[static_cast<size_t>(i)] = at0(s, i) * at0(s, i) - at0(s, i - 1) * at0(s, i + 1);
  return b;
}

std::pair<bool, std::optional<long>> is_log_concave(const RatSequence& s) {
  long n = static_cast<long>(s.size()) - 1;
  for (long i = 1; i <= n; ++i)
    if (at0(s, i) * at0(s, i) - at0(s, i + 1) * at0(s, i - 1) < 0)
      return {false, i};
  return {true, std::nullopt};
}

long klc_depth(const RatSequence& s, long max_k) {
  if (max_k < 0) throw std::invalid_argument("klc_depth: max_k < 0");
  RatSequence cur = s;
  for (long k = 0; k < max_k; ++k) {
    if (!is_log_concave(cur).first) return k;
    cur = l_operator(cur);
  }
  return max_k;
}

VerificationReport check_2lc(const BorosMollRow& row) {
  long m = row.m();
  if (m < 2) throw std::invalid_argument("check_2lc: m < 2");
  VerificationReport rep;
  rep.theorem = "2lc";
  rep.m = m;

  RatSequence b = l_operator(row.values());
  for (long i = 0; i <= m; ++i)
    if (at0(b, i) <= 0)
      throw std::runtime_error("check_2lc: nonpositive L-value at i=" +
                               std::to_string(i));

  // strict ratio form: b_{i-1} b_{i+1} < b_i^2, denominators positive
  for (long i = 1; i <= m - 1; ++i) {
    ++rep.checked;
    if (!(at0(b, i - 1) * at0(b, i + 1) < at0(b, i) * at0(b, i)))
      rep.fail(i, to_string(at0(b, i - 1) * at0(b, i + 1)),
               to_string(at0(b, i) * at0(b, i)));
  }

  // full log-concavity of L^1 and L^2 including boundary indices
  auto [lc1, v1] = is_log_concave(b);
  if (!lc1) rep.fail(*v1, "L1 not log-concave", "");
  auto [lc2, v2] = is_log_concave(l_operator(b));
  if (!lc2) rep.fail(*v2, "L2 not log-concave", "");
  return rep;
}

MollMinSequence moll_min(const BorosMollRow& row) {
  long m = row.m();
  if (m < 2) throw std::invalid_argument("moll_min: m < 2");
  MollMinSequence out;
  out.m = m;
  for (long i = 1; i <= m; ++i)
    out.e.push_back(Rational(i * (i + 1)) *
                    (row.at(i) * row.at(i) - row.at(i - 1) * row.at(i + 1)));

  const Rational& em = out.e.back();
  out.min_at_m = true;
  for (long i = 1; i < m; ++i)
    if (!(em < out.e[static_cast<size_t>(i - 1)])) out.min_at_m = false;

  Int c = binomial(2 * m, m);
  Rational closed = rat(m * (m + 1)) * Rational(c * c);
  mpq_div_2exp(closed.get_mpq_t(), closed.get_mpq_t(),
               static_cast<unsigned long>(2 * m));
  out.closed_form_ok = (em == closed);

  out.log_concave = is_log_concave(out.e).first;
  return out;
}

VerificationReport theorem17_chain(const BorosMollRow& row) {
  long m = row.m();
  if (m < 3) throw std::invalid_argument("theorem17_chain: m < 3");
  VerificationReport rep;
  rep.theorem = "thm17";
  rep.m = m;

  RatSequence b = l_operator(row.values());
  for (long i = 0; i <= m; ++i)
    if (at0(b, i) <= 0)
      throw std::runtime_error("theorem17_chain: nonpositive L-value");

  // b_{i-1}/b_i < i(i+1)/((i-1)(i+2)) * b_i/b_{i+1}, 2 <= i <= m-1
  for (long i = 2; i <= m - 1; ++i) {
    ++rep.checked;
    Rational lhs = at0(b, i - 1) * at0(b, i + 1) * rat((i - 1) * (i + 2));
    Rational rhs = rat(i * (i + 1)) * at0(b, i) * at0(b, i);
    if (!(lhs < rhs)) rep.fail(i, to_string(lhs), to_string(rhs));
  }
  // shifted form: b_i/b_{i+1} < (i+1)(i+2)/(i(i+3)) * b_{i+1}/b_{i+2}
  for (long i = 1; i <= m - 2; ++i) {
    ++rep.checked;
    Rational lhs = at0(b, i) * at0(b, i + 2) * rat(i * (i + 3));
    Rational rhs = rat((i + 1) * (i + 2)) * at0(b, i + 1) * at0(b, i + 1);
    if (!(lhs < rhs)) rep.fail(i, to_string(lhs), to_string(rhs));
  }
  // e-sequence form: e_i e_{i+2} < e_{i+1}^2 with e_i = i(i+1) b_i
  for (long i = 1; i <= m - 2; ++i) {
    ++rep.checked;
    Rational ei = rat(i * (i + 1)) * at0(b, i);
    Rational e1 = rat((i + 1) * (i + 2)) * at0(b, i + 1);
    Rational e2 = rat((i + 2) * (i + 3)) * at0(b, i + 2);
    if (!(ei * e2 < e1 * e1)) rep.fail(i, to_string(ei * e2), to_string(e1 * e1));
  }
  return rep;
}

}  // namespace bm
