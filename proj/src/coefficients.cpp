#include "bm/coefficients.hpp"

#include <sstream>
#include <stdexcept>

namespace bm {

namespace {
const Rational kZero(0);

Rational pow2_inv(long e) {  // 2^{-e}
  Int den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
  Rational r(1, den);
  r.canonicalize();
  return r;
}
}  // namespace

BorosMollRow::BorosMollRow(long m, std::vector<Rational> d)
    : m_(m), d_(std::move(d)) {
  if (m < 0 || d_.size() != static_cast<size_t>(m + 1))
    throw std::invalid_argument("BorosMollRow: length must be m+1");
}

const Rational& BorosMollRow::at(long i) const {
  if (i < 0 || i > m_) return kZero;
  return d_[static_cast<size_t>(i)];
}

BorosMollRow row_single_sum(long m) {
  if (m < 0) throw std::invalid_argument("row_single_sum: m < 0");
  std::vector<Rational> d(static_cast<size_t>(m + 1));
  Rational scale = pow2_inv(2 * m);
  for (long i = 0; i <= m; ++i) {
    Int acc = 0;
    for (long k = i; k <= m; ++k) {
      Int term = binomial(2 * m - 2 * k, m - k) * binomial(m + k, k) *
                 binomial(k, i);
      mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(),
                   static_cast<unsigned long>(k));
      acc += term;
    }
    d[static_cast<size_t>(i)] = scale * Rational(acc);
  }
  return BorosMollRow(m, std::move(d));
}

BorosMollRow row_double_sum(long m) {
  if (m < 0) throw std::invalid_argument("row_double_sum: m < 0");
  std::vector<Rational> d(static_cast<size_t>(m + 1), Rational(0));
  for (long j = 0; 2 * j <= 2 * m + 1; ++j) {
    for (long k = 0; k <= m - j; ++k) {
      Rational c = Rational(binomial(2 * m + 1, 2 * j) * binomial(m - j, k) *
                            binomial(2 * k + 2 * j, k + j)) *
                   pow2_inv(3 * (k + j));
      // coefficient of a^i in (a+1)^j (a-1)^k
      for (long i = 0; i <= j + k && i <= m; ++i) {
        Int conv = 0;
        for (long u = std::max(0L, i - k); u <= std::min(j, i); ++u) {
          Int t = binomial(j, u) * binomial(k, i - u);
          if ((k - (i - u)) % 2 != 0) t = -t;
          conv += t;
        }
        if (conv != 0) d[static_cast<size_t>(i)] += c * Rational(conv);
      }
    }
  }
  return BorosMollRow(m, std::move(d));
}

BorosMollRow row_next(const BorosMollRow& row) {
  long m = row.m();
  std::vector<Rational> d(static_cast<size_t>(m + 2));
  for (long i = 0; i <= m + 1; ++i) {
    Rational v = rat(m + i, m + 1) * row.at(i - 1) +
                 rat(4 * m + 2 * i + 3, 2 * (m + 1)) * row.at(i);
    d[static_cast<size_t>(i)] = v;
  }
  return BorosMollRow(m + 1, std::move(d));
}

bool RecurrenceResiduals::all_zero() const {
  for (const auto& v : rec2)
    if (v != 0) return false;
  for (const auto& v : rec3)
    if (v != 0) return false;
  for (const auto& v : rec4)
    if (v != 0) return false;
  return true;
}

RecurrenceResiduals check_recurrences(const BorosMollRow& r0,
                                      const BorosMollRow& r1,
                                      const BorosMollRow& r2) {
  long m = r0.m();
  if (r1.m() != m + 1 || r2.m() != m + 2)
    throw std::invalid_argument("check_recurrences: rows not consecutive");
  RecurrenceResiduals out;
  for (long i = 0; i <= m; ++i) {
    Rational rhs = rat((4 * m - 2 * i + 3) * (m + i + 1),
                       2 * (m + 1) * (m + 1 - i)) *
                       r0.at(i) -
                   rat(i * (i + 1), (m + 1) * (m + 1 - i)) * r0.at(i + 1);
    out.rec2.push_back(r1.at(i) - rhs);
  }
  for (long i = 0; i <= m + 1; ++i) {
    Rational rhs = rat(-4 * i * i + 8 * m * m + 24 * m + 19,
                       2 * (m + 2 - i) * (m + 2)) *
                       r1.at(i) -
                   rat((m + i + 1) * (4 * m + 3) * (4 * m + 5),
                       4 * (m + 2 - i) * (m + 1) * (m + 2)) *
                       r0.at(i);
    out.rec3.push_back(r2.at(i) - rhs);
  }
  for (long i = 0; i <= m + 1; ++i) {
    Rational res = Rational((m + 2 - i) * (m + i - 1)) * r0.at(i - 2) -
                   Rational((i - 1) * (2 * m + 1)) * r0.at(i - 1) +
                   Rational(i * (i - 1)) * r0.at(i);
    out.rec4.push_back(res);
  }
  return out;
}

Rational ratio(const BorosMollRow& row_m, const BorosMollRow& row_m1, long i) {
  if (row_m1.m() != row_m.m() + 1)
    throw std::invalid_argument("ratio: rows not consecutive");
  if (i < 0 || i > row_m.m()) throw std::out_of_range("ratio: i out of range");
  return row_m1.at(i) / row_m.at(i);
}

Rational ratio(long m, long i) {
  BorosMollRow r0 = row_single_sum(m);
  return ratio(r0, row_next(r0), i);
}

std::string row_to_json(const BorosMollRow& row) {
  long m = row.m();
  std::ostringstream os;
  os << "{\"m\": " << m << ", \"den_pow2\": " << 2 * m << ", \"scaled\": [";
  for (long i = 0; i <= m; ++i) {
    Rational scaled = row.at(i);
    Int num = scaled.get_num();
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(),
                 static_cast<unsigned long>(2 * m));
    Int q = num / scaled.get_den();
    if (q * scaled.get_den() != num)
      throw std::logic_error("row_to_json: 2^{2m} d_i not an integer");
    os << (i ? ", " : "") << q.get_str();
  }
  os << "]}";
  return os.str();
}

}  // namespace bm
