#ifndef BM_LOGCONCAVITY_HPP
#define BM_LOGCONCAVITY_HPP

#include <optional>
#include <vector>

#include "bm/coefficients.hpp"
#include "bm/report.hpp"

namespace bm {

// Finite sequence with a_{-1} = a_{n+1} = 0 in every operator evaluation.
using RatSequence = std::vector<Rational>;

// b_i = a_i^2 - a_{i-1} a_{i+1}
RatSequence l_operator(const RatSequence& s);

// a_i^2 - a_{i+1} a_{i-1} >= 0 for 1 <= i <= n; returns first violation index
std::pair<bool, std::optional<long>> is_log_concave(const RatSequence& s);

// largest k <= max_k with L^j(s) log-concave for all 0 <= j <= k-1
long klc_depth(const RatSequence& s, long max_k);

// Strict ratio inequality per i, 1 <= i <= m-1, by cross-multiplication;
// also full log-concavity of the L^1 and L^2 sequences at every index.
VerificationReport check_2lc(const BorosMollRow& row);

struct MollMinSequence {
  long m;
  std::vector<Rational> e;  // e[i-1] = i(i+1)(d_i^2 - d_{i-1} d_{i+1}), 1<=i<=m
  bool min_at_m = false;    // strict unique minimum at i = m
  bool closed_form_ok = false;  // e_m == 2^{-2m} m(m+1) C(2m,m)^2
  bool log_concave = false;
  bool pass() const { return min_at_m && closed_form_ok && log_concave; }
};

MollMinSequence moll_min(const BorosMollRow& row);

// The closing chain: the i(i+1)/((i-1)(i+2)) > 1 strengthening, its
// i -> i+1 shift, and the rewritten e-sequence log-concavity form.
VerificationReport theorem17_chain(const BorosMollRow& row);

}  // namespace bm

#endif
