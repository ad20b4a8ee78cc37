#include "bm/identities.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bm/thresholds.hpp"

namespace bm {

namespace {

using P = BivarPoly;

// monomial c * i^ei * m^em
P t(long c, long ei, long em) {
  P p;
  p.add_term(c, em, ei);
  return p;
}

P var_m() { return P::var_m(); }
P var_i() { return P::var_i(); }

// 2i^4+4i^3m+2i^2m^2+10i^3+14i^2m+6im^2+2m^3+17i^2+21im+12m^2+10i+18m
// (appears verbatim as the first K factor, R, R1, M1 and G1)
P mcore() {
  return t(2, 4, 0) + t(4, 3, 1) + t(2, 2, 2) + t(10, 3, 0) + t(14, 2, 1) +
         t(6, 1, 2) + t(2, 0, 3) + t(17, 2, 0) + t(21, 1, 1) + t(12, 0, 2) +
         t(10, 1, 0) + t(18, 0, 1);
}

P build_D() {
  return t(6, 1, 2) + t(2, 2, 2) + t(21, 1, 1) + t(14, 2, 1) + t(4, 3, 1) +
         t(10, 1, 0) + t(17, 2, 0) + t(10, 3, 0) + t(2, 4, 0) + t(2, 0, 3) +
         t(12, 0, 2) + t(18, 0, 1);
}

P build_E() {
  P i = var_i(), m = var_m();
  return 4 * pw(i, 2) * (pw(i, 2) - 2 * pw(m, 2)) * pw(i + m, 2) +
         2 * (i + m) *
             (t(10, 4, 0) + t(-4, 0, 4) + t(-9, 1, 3) + t(-27, 2, 2) +
              t(-4, 3, 1)) +
         t(27, 4, 0) + t(-55, 3, 1) + t(-175, 2, 2) + t(-139, 1, 3) +
         t(-62, 0, 4) + t(-16, 3, 0) + t(-155, 2, 1) + t(-229, 1, 2) +
         t(-162, 0, 3) + t(-60, 2, 0) + t(-142, 1, 1) + t(-162, 0, 2) +
         t(-30, 1, 0) + t(-54, 0, 1);
}

P build_F() {
  P i = var_i(), m = var_m();
  return 32 * pw(i, 2) * pw(m, 2) * (i - m) * pw(i + m, 3) +
         16 * m *
             (t(4, 4, 0) + t(10, 3, 1) + t(-14, 2, 2) + t(-3, 1, 3) +
              t(-2, 0, 4)) *
             pw(i + m, 2) +
         2 * (i + m) *
             (t(-152, 0, 5) + t(-250, 1, 4) + t(-377, 2, 3) + t(111, 3, 2) +
              t(181, 4, 1) + t(15, 5, 0)) +
         t(168, 5, 0) + t(694, 4, 1) + t(-280, 3, 2) + t(-2052, 2, 3) +
         t(-2160, 1, 4) + t(-1106, 0, 5) + t(273, 4, 0) + t(-1, 3, 1) +
         t(-1809, 2, 2) + t(-2831, 1, 3) + t(-1968, 0, 4) + t(18, 3, 0) +
         t(-898, 2, 1) + t(-1936, 1, 2) + t(-1836, 0, 3) + t(-207, 2, 0) +
         t(-663, 1, 1) + t(-864, 0, 2) + t(-90, 1, 0) + t(-162, 0, 1);
}

P build_G() {
  P i = var_i(), m = var_m();
  return pw(m, 2) * pw(2 * pw(i, 3) - pw(m, 2), 2) +
         (t(56, 6, 1) + t(-24, 3, 3)) + (t(20, 5, 2) + t(-2, 2, 4)) +
         t(4, 8, 0) + t(8, 7, 1) + t(40, 7, 0) + t(169, 6, 0) + t(166, 5, 1) +
         t(70, 4, 2);
}

P build_H() {
  return t(1588, 7, 0) + t(4440, 6, 1) + t(4768, 5, 2) + t(2148, 4, 3) +
         t(324, 3, 4) + t(144, 2, 5) + t(104, 1, 6) + t(52, 0, 7) +
         t(2345, 6, 0) + t(6666, 5, 1) + t(6991, 4, 2) + t(3624, 3, 3) +
         t(1567, 2, 4) + t(646, 1, 5) + t(289, 0, 6) + t(2418, 5, 0) +
         t(7232, 4, 1) + t(8044, 3, 2) + t(5340, 2, 3) + t(2234, 1, 4) +
         t(892, 0, 5) + t(1903, 4, 0) + t(5810, 3, 1) + t(7225, 2, 2) +
         t(4104, 1, 3) + t(1618, 0, 4) + t(1086, 3, 0) + t(3332, 2, 1) +
         t(3470, 1, 2) + t(1608, 0, 3) + t(321, 2, 0) + t(914, 1, 1) +
         t(657, 0, 2);
}

P build_K() {
  P k2 = t(2, 3, 2) + t(2, 2, 3) + t(-2, 5, 0) + t(-2, 4, 1) + t(-9, 4, 0) +
         t(2, 3, 1) + t(16, 2, 2) + t(6, 1, 3) + t(1, 0, 4) + t(-7, 3, 0) +
         t(23, 2, 1) + t(23, 1, 2) + t(9, 0, 3) + t(12, 2, 0) + t(16, 1, 1) +
         t(20, 0, 2) + t(8, 1, 0) + t(8, 0, 1);
  return 4 * mcore() * k2;
}

// rational part of the second L factor
P build_La() {
  return t(-4, 3, 1) + t(-8, 2, 2) + t(-4, 1, 3) + t(-20, 2, 1) +
         t(-24, 1, 2) + t(-4, 0, 3) + t(7, 2, 0) + t(-28, 1, 1) +
         t(-19, 0, 2) + t(20, 1, 0) + t(-20, 0, 1) + t(7, 0, 0);
}

// sqrt(4i^2+4m+1) coefficient of the second L factor
P build_Lb() {
  return t(2, 2, 1) + t(4, 1, 2) + t(2, 0, 3) + t(1, 2, 0) + t(24, 0, 1) +
         t(14, 1, 1) + t(13, 0, 2) + t(6, 1, 0) + t(9, 0, 0);
}

// Lb^2 (4i^2+4m+1) - La^2, as printed in the L positivity argument
P build_LposW() {
  return t(16, 6, 1) + t(96, 5, 2) + t(176, 4, 3) + t(128, 3, 4) +
         t(48, 2, 5) + t(32, 1, 6) + t(16, 0, 7) + t(4, 6, 0) + t(264, 5, 1) +
         t(972, 4, 2) + t(1088, 3, 3) + t(492, 2, 4) + t(312, 1, 5) +
         t(196, 0, 6) + t(48, 5, 0) + t(1456, 4, 1) + t(3248, 3, 2) +
         t(2064, 2, 3) + t(1184, 1, 4) + t(960, 0, 5) + t(168, 4, 0) +
         t(3508, 3, 1) + t(4368, 2, 2) + t(2372, 1, 3) + t(2384, 0, 4) +
         t(164, 3, 0) + t(3876, 2, 1) + t(3036, 1, 2) + t(3196, 0, 3) +
         t(-120, 2, 0) + t(2164, 1, 1) + t(2404, 0, 2) + t(-172, 1, 0) +
         t(1036, 0, 1) + t(32, 0, 0);
}

P build_R() {
  return t(2, 2, 2) + t(4, 3, 1) + t(6, 1, 2) + t(14, 2, 1) + t(2, 4, 0) +
         t(10, 3, 0) + t(21, 1, 1) + t(17, 2, 0) + t(2, 0, 3) + t(12, 0, 2) +
         t(18, 0, 1) + t(10, 1, 0);
}

P build_S() {
  P i = var_i(), m = var_m();
  return 4 * pw(i, 2) * (pw(i, 2) - 2 * pw(m, 2)) * pw(i + m, 3) +
         2 *
             (t(8, 4, 0) + t(-4, 3, 1) + t(-21, 2, 2) + t(-9, 1, 3) +
              t(-4, 0, 4)) *
             pw(i + m, 2) +
         (i + m) * (t(-54, 0, 4) + t(-121, 1, 3) + t(-99, 2, 2) +
                    t(-41, 3, 1) + t(7, 4, 0)) +
         t(-41, 4, 0) + t(-98, 3, 1) + t(-187, 2, 2) + t(-262, 1, 3) +
         t(-100, 0, 4) + t(-41, 3, 0) + t(-51, 2, 1) + t(-106, 1, 2) +
         t(25, 2, 0) + t(45, 1, 1) + t(108, 0, 2) + t(30, 1, 0) + t(54, 0, 1);
}

P build_T() {
  P i = var_i(), m = var_m();
  return 32 * pw(i, 2) * pw(m, 2) * pw(i + m, 4) +
         16 * m *
             (t(4, 4, 0) + t(18, 3, 1) + t(18, 2, 2) + t(7, 1, 3) +
              t(2, 0, 4)) *
             pw(i + m, 2) +
         2 * (i + m) *
             (t(120, 0, 5) + t(414, 1, 4) + t(601, 2, 3) + t(523, 3, 2) +
              t(199, 4, 1) + t(15, 5, 0)) +
         t(132, 5, 0) + t(850, 4, 1) + t(1912, 3, 2) + t(2652, 2, 3) +
         t(2084, 1, 4) + t(562, 0, 5) + t(153, 4, 0) + t(417, 3, 1) +
         t(983, 2, 2) + t(1307, 1, 3) + t(300, 0, 4) + t(-48, 3, 0) +
         t(-328, 2, 1) + t(-248, 1, 2) + t(-432, 0, 3) + t(-177, 2, 0) +
         t(-405, 1, 1) + t(-540, 0, 2) + t(-90, 1, 0) + t(-162, 0, 1);
}

P build_X() {
  return
      // leading block
      t(16, 7, 4) + t(-16, 4, 6) + t(4, 1, 8) + t(64, 8, 3) + t(-24, 2, 7) +
      t(16, 11, 0) + t(64, 10, 1) + t(96, 9, 2) +
      // grouped blocks as printed
      (t(128, 10, 0) + t(448, 9, 1) + t(624, 8, 2) + t(448, 7, 3) +
       t(160, 6, 4) + t(-100, 3, 6)) +
      (t(372, 9, 0) + t(1280, 8, 1) + t(1868, 7, 2) + t(1256, 6, 3) +
       t(128, 5, 4) + t(-240, 4, 5)) +
      (t(340, 8, 0) + t(1712, 7, 1) + t(2520, 6, 2) + t(620, 5, 3) +
       t(-1132, 4, 4) + t(-1096, 3, 5) + t(-528, 2, 6)) +
      (t(3692, 2, 1) + t(-52, 1, 7) + t(-16, 0, 8) + t(-523, 7, 0) +
       t(-2, 6, 1) + t(-509, 5, 2) + t(-2584, 4, 3) + t(-3749, 3, 4) +
       t(-2910, 2, 5) + t(-635, 1, 6) + t(-176, 0, 7) + t(-1416, 6, 0) +
       t(-5048, 3, 3) + t(-5940, 2, 4) + t(-1810, 1, 5) + t(-656, 0, 6) +
       t(-586, 5, 0) + t(-3890, 4, 1) + t(-3588, 2, 3) + t(-667, 1, 4) +
       t(-688, 0, 5) + t(1240, 4, 0) + t(1054, 3, 1) + t(2274, 2, 2) +
       t(3216, 1, 3) + t(1104, 0, 4) + t(1221, 3, 0) + t(2896, 1, 2) +
       t(2160, 0, 3) + t(-3550, 5, 1) + t(-4508, 4, 2) + t(-268, 2, 0) +
       t(-2525, 3, 2) + t(488, 1, 1) + t(-432, 0, 2) + t(-524, 1, 0) +
       t(-1296, 0, 1));
}

P build_S1() {
  return t(8, 5, 2) + t(-4, 2, 4) + t(36, 4, 2) + t(12, 3, 3) +
         (t(16, 6, 1) + t(-4, 0, 5)) + (t(8, 7, 0) + t(-2, 1, 4)) +
         (t(32, 6, 0) + t(52, 5, 1) + t(30, 5, 0) + t(88, 4, 1) +
          t(66, 3, 2) + t(-28, 2, 3) + t(-6, 1, 4)) +
         (t(36, 0, 1) + t(-27, 4, 0) + t(55, 3, 1) + t(-65, 2, 2) +
          t(-23, 1, 3) + t(-24, 0, 4) + t(-56, 3, 0) + t(-101, 2, 1) +
          t(-9, 1, 2) + t(-32, 0, 3) + t(-9, 2, 0) + t(-20, 1, 1) +
          t(24, 0, 2) + t(22, 1, 0));
}

P build_N1() {
  return t(4, 10, 1) + t(-40, 8, 3) + t(-96, 7, 4) + t(-128, 6, 5) +
         t(-128, 5, 6) + t(-88, 4, 7) + t(-32, 3, 8) + t(-4, 2, 9) +
         t(1, 10, 0) + t(12, 9, 1) + t(-92, 8, 2) + t(-400, 7, 3) +
         t(-774, 6, 4) + t(-1100, 5, 5) + t(-1072, 4, 6) + t(-592, 3, 7) +
         t(-171, 2, 8) + t(-32, 1, 9) + t(-4, 0, 10) + t(6, 9, 0) +
         t(-58, 8, 1) + t(-556, 7, 2) + t(-1602, 6, 3) + t(-3236, 5, 4) +
         t(-4334, 4, 5) + t(-3204, 3, 6) + t(-1270, 2, 7) + t(-322, 1, 8) +
         t(-48, 0, 9) + t(-3, 8, 0) + t(-351, 7, 1) + t(-1487, 6, 2) +
         t(-4194, 5, 3) + t(-7663, 4, 4) + t(-7213, 3, 5) + t(-3519, 2, 6) +
         t(-1122, 1, 7) + t(-208, 0, 8) + t(-87, 7, 0) + t(-695, 6, 1) +
         t(-2422, 5, 2) + t(-5984, 4, 3) + t(-6495, 3, 4) + t(-3165, 2, 5) +
         t(-1272, 1, 6) + t(-336, 0, 7) + t(-161, 6, 0) + t(-399, 5, 1) +
         t(-1212, 4, 2) + t(-107, 3, 3) + t(2447, 2, 4) + t(1012, 1, 5) +
         t(104, 0, 6) + t(87, 5, 0) + t(839, 4, 1) + t(3175, 3, 2) +
         t(6101, 2, 3) + t(2902, 1, 4) + t(816, 0, 5) + t(377, 4, 0) +
         t(1388, 3, 1) + t(3137, 2, 2) + t(862, 1, 3) + t(432, 0, 4) +
         t(32, 3, 0) + t(-20, 2, 1) + t(-1308, 1, 2) + t(-432, 0, 3) +
         t(-252, 2, 0) + t(-720, 1, 1) + t(-324, 0, 2);
}

P build_P() {
  return t(4, 6, 0) + (t(4, 3, 3) + t(-2, 0, 5)) + (t(38, 3, 2) + t(-9, 0, 4)) +
         (t(14, 2, 3) + t(-11, 0, 3)) + t(12, 5, 1) + t(18, 5, 0) +
         t(44, 4, 1) + (t(21, 4, 0) + t(-10, 3, 0)) + t(60, 3, 1) +
         (t(35, 2, 1) + t(-21, 1, 1)) + t(12, 4, 2) +
         (t(64, 2, 2) + t(-10, 0, 2) + t(-22, 0, 1)) + t(16, 1, 3) +
         (t(34, 1, 2) + t(-27, 2, 0) + t(-6, 1, 0));
}

P build_H1() {
  return t(2, 7, 0) + t(4, 6, 1) + t(7, 6, 0) + t(11, 5, 1) + t(8, 4, 2) +
         t(14, 3, 3) + t(15, 2, 4) + t(3, 4, 0) +
         (t(7, 1, 5) + t(-4, 4, 3)) + (t(2, 0, 6) + t(-2, 3, 4)) +
         t(7, 5, 0) + t(34, 4, 1) + t(68, 3, 2) + t(58, 2, 3) +
         (t(29, 1, 4) + t(-10, 2, 1)) + (t(12, 0, 5) + t(-12, 0, 3)) +
         (t(61, 3, 1) + t(-14, 2, 0) + t(-40, 1, 1)) +
         (t(63, 2, 2) + t(-25, 1, 2) + t(-18, 0, 2)) + t(21, 1, 3) +
         t(16, 0, 4) + t(-5, 3, 0);
}

P build_Y5() {
  P i = var_i(), m = var_m();
  return 4 * pw(i, 2) * (2 * pw(m, 2) - pw(i, 2)) * pw(i + m, 2) +
         2 * (i + m) *
             (t(4, 0, 4) + t(7, 1, 3) + t(31, 2, 2) + t(4, 3, 1) +
              t(-12, 4, 0)) +
         t(-35, 4, 0) + t(59, 3, 1) + t(199, 2, 2) + t(151, 1, 3) +
         t(82, 0, 4) + t(16, 3, 0) + t(181, 2, 1) + t(321, 1, 2) +
         t(282, 0, 3) + t(70, 2, 0) + t(294, 1, 1) + t(368, 0, 2) +
         t(106, 1, 0) + t(160, 0, 1);
}

P build_Y6() {
  P i = var_i(), m = var_m();
  P a = t(2, 4, 0) + t(4, 3, 1) + t(2, 2, 2) + t(14, 3, 0) + t(18, 2, 1) +
        t(6, 1, 2) + t(2, 0, 3) + t(33, 2, 0) + t(33, 1, 1) + t(18, 0, 2) +
        t(37, 1, 0) + t(48, 0, 1) + t(32, 0, 0);
  P b = 32 * pw(i, 2) * pw(m, 2) * (m - i) * pw(i + m, 2) +
        16 * m * (i + m) *
            (t(2, 0, 4) + t(1, 1, 3) + t(16, 2, 2) + t(-11, 3, 1) +
             t(-4, 4, 0)) +
        t(-30, 5, 0) + t(-394, 4, 1) + t(-110, 3, 2) + t(762, 2, 3) +
        t(300, 1, 4) + t(368, 0, 5) + t(-168, 4, 0) + t(-338, 3, 1) +
        t(1154, 2, 2) + t(558, 1, 3) + t(1538, 0, 4) + t(1028, 2, 1) +
        t(-141, 3, 0) + t(631, 1, 2) + t(2882, 0, 3) + t(391, 2, 0) +
        t(639, 1, 1) + t(2480, 0, 2) + t(260, 1, 0) + t(800, 0, 1);
  return a * b;
}

P build_f() {
  return t(256, 0, 11) + t(-4608, 0, 10) + t(36544, 0, 9) + t(-177920, 0, 8) +
         t(572592, 0, 7) + t(-1218432, 0, 6) + t(1573768, 0, 5) +
         t(-940352, 0, 4) + t(-66903, 0, 3) + t(-65525, 0, 2) +
         t(-3657, 0, 1) + t(-963, 0, 0);
}

P build_g() {
  return t(2048, 0, 12) + t(-10240, 0, 11) + t(16512, 0, 10) +
         t(-3456, 0, 9) + t(-35232, 0, 8) + t(99120, 0, 7) + t(44488, 0, 6) +
         t(-375620, 0, 5) + t(431652, 0, 4) + t(-182601, 0, 3) +
         t(7362, 0, 2) + t(13797, 0, 1) + t(-2430, 0, 0);
}

Rational fr(const Int& num, const Int& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Int ip(long x, long e) {
  Int r = 1;
  for (long k = 0; k < e; ++k) r *= x;
  return r;
}

}  // namespace

const BivarPoly& PolyTable::get(const std::string& name) const {
  auto it = polys_.find(name);
  if (it == polys_.end())
    throw std::out_of_range("PolyTable: unknown polynomial " + name);
  return it->second;
}

void PolyTable::set(const std::string& name, BivarPoly p) {
  polys_[name] = std::move(p);
}

std::vector<std::string> PolyTable::names() const {
  std::vector<std::string> out;
  for (const auto& [n, p] : polys_) out.push_back(n);
  return out;
}

PolyTable build_poly_table() {
  PolyTable t;
  t.set("D", build_D());
  t.set("E_sec3", build_E());
  t.set("F", build_F());
  t.set("G", build_G());
  t.set("H", build_H());
  t.set("K", build_K());
  t.set("La", build_La());
  t.set("Lb", build_Lb());
  t.set("LposW", build_LposW());
  t.set("R", build_R());
  t.set("S", build_S());
  t.set("T", build_T());
  t.set("X", build_X());
  t.set("R1", mcore());
  t.set("S1", build_S1());
  t.set("M1", mcore());
  t.set("N1", build_N1());
  t.set("P", build_P());
  t.set("G1", mcore());
  t.set("H1", build_H1());
  t.set("Y5", build_Y5());
  t.set("Y6", build_Y6());
  t.set("f", build_f());
  t.set("g", build_g());
  return t;
}

const PolyTable& default_table() {
  static const PolyTable t = build_poly_table();
  return t;
}

namespace {
uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}
}  // namespace

void save_poly_table(const PolyTable& t, std::ostream& os) {
  std::ostringstream body;
  for (const auto& [name, poly] : t.all())
    for (const auto& [k, c] : poly.terms())
      body << name << ' ' << k.first << ' ' << k.second << ' ' << c.get_str()
           << '\n';
  os << body.str();
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(body.str())));
  os << "# checksum " << buf << '\n';
}

PolyTable load_poly_table(std::istream& is) {
  PolyTable t;
  std::map<std::string, BivarPoly> polys;
  std::ostringstream body;
  std::string line;
  bool checksum_seen = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line.rfind("# checksum ", 0) == 0) {
      std::string expect = line.substr(11);
      char buf[32];
      std::snprintf(buf, sizeof buf, "%016llx",
                    static_cast<unsigned long long>(fnv1a(body.str())));
      if (expect != buf)
        throw std::runtime_error("load_poly_table: checksum mismatch");
      checksum_seen = true;
      continue;
    }
    body << line << '\n';
    std::istringstream ls(line);
    std::string name, coeff;
    long em, ei;
    if (!(ls >> name >> em >> ei >> coeff))
      throw std::runtime_error("load_poly_table: malformed line: " + line);
    polys[name].add_term(Int(coeff), em, ei);
  }
  if (!checksum_seen)
    throw std::runtime_error("load_poly_table: missing checksum line");
  for (auto& [name, poly] : polys) t.set(name, std::move(poly));
  return t;
}

// ---- quadratic-form coefficients ----

Rational eval_A(const PolyTable& t, long m, long i) {
  Int num = ip(m + 1, 2) * ip(m + 1 - i, 2) * t.get("D").eval(m, i);
  Int den = Int(m + i) * ip(i, 2) * (i + 1);
  return -fr(num, den);
}

Rational eval_B(const PolyTable& t, long m, long i) {
  Int num = Int(i - m - 1) * (m + 1) * t.get("E_sec3").eval(m, i);
  Int den = Int(i + m) * ip(i, 2) * (i + 1);
  return fr(num, den);
}

Rational eval_C(const PolyTable& t, long m, long i) {
  return fr(t.get("F").eval(m, i), 4 * Int(i + m) * ip(i, 2) * (i + 1));
}

Rational delta1_def(const PolyTable& t, long m, long i) {
  Rational a = eval_A(t, m, i), b = eval_B(t, m, i), c = eval_C(t, m, i);
  return b * b - 4 * a * c;
}

Rational delta1_closed(const PolyTable& t, long m, long i) {
  Int num = ip(m + 1 - i, 2) * ip(m + 1, 2) *
            (4 * ip(m + i, 2) * t.get("G").eval(m, i) + t.get("H").eval(m, i));
  Int den = ip(i, 2) * ip(i + m, 2) * ip(i + 1, 2);
  return fr(num, den);
}

Rational eval_U(const PolyTable& t, long m, long i) {
  Int num = ip(m + 1, 2) * (m + 1 - i) * t.get("R").eval(m, i);
  return fr(num, Int(i) * ip(m + i, 2));
}

Rational eval_V(const PolyTable& t, long m, long i) {
  Int num = Int(m + 1) * t.get("S").eval(m, i);
  return fr(num, Int(i) * (m + i - 1) * ip(m + i, 2));
}

Rational eval_W(const PolyTable& t, long m, long i) {
  return fr(t.get("T").eval(m, i), 4 * Int(i) * (m + i - 1) * ip(m + i, 2));
}

Rational delta2_def(const PolyTable& t, long m, long i) {
  Rational u = eval_U(t, m, i), v = eval_V(t, m, i), w = eval_W(t, m, i);
  return v * v - 4 * u * w;
}

Rational delta2_closed(const PolyTable& t, long m, long i) {
  Int num = ip(m + 1, 2) * t.get("X").eval(m, i);
  Int den = Int(i) * ip(m + i, 2) * ip(m + i - 1, 2);
  return fr(num, den);
}

Rational eval_A1(long m, long i) { return rat(2 * (m + 1) * (m + 1 - i)); }
Rational eval_B1(long m, long i) {
  return rat(4 * m * m + 7 * m + 3 - 2 * i * i);
}
Rational eval_C1(long m, long i) { return rat(4 * i * i + 4 * m + 1); }

Rational eval_D1_def(const PolyTable& t, long m, long i) {
  return -eval_V(t, m, i) * eval_A1(m, i) -
         2 * eval_U(t, m, i) * eval_B1(m, i);
}

Rational eval_D1_closed(long m, long i) {
  Int num = 2 * ip(m + 1, 2) * (m + 1 - i) * (2 * m + 1) *
            Int(i * i - i + m + m * m) * ip(m + 2 + i, 2);
  Int den = ip(i + m, 2) * (i + m - 1);
  return fr(num, den);
}

Rational eval_E1_def(const PolyTable& t, long m, long i) {
  Rational d1 = eval_D1_def(t, m, i), a1 = eval_A1(m, i);
  Rational u = eval_U(t, m, i);
  return d1 * d1 - a1 * a1 * delta2_def(t, m, i) -
         4 * rat(i * i) * u * u * eval_C1(m, i);
}

Rational eval_E1_closed(const PolyTable& t, long m, long i) {
  Int num = 8 * ip(m + 1 - i, 2) * ip(m + 1, 4) * t.get("R1").eval(m, i) *
            t.get("S1").eval(m, i);
  Int den = Int(i) * (m + i - 1) * ip(m + i, 3);
  return -fr(num, den);
}

Rational eval_F1_def(const PolyTable& t, long m, long i) {
  Rational e1 = eval_E1_def(t, m, i), u = eval_U(t, m, i), a1 = eval_A1(m, i);
  return e1 * e1 -
         16 * rat(i * i) * u * u * a1 * a1 * delta2_def(t, m, i) *
             eval_C1(m, i);
}

Rational eval_F1_closed(const PolyTable& t, long m, long i) {
  Int m1 = t.get("M1").eval(m, i);
  Int num = 256 * ip(m + 1 - i, 4) * ip(m + 1, 8) * m1 * m1 *
            t.get("N1").eval(m, i);
  Int den = ip(i, 2) * ip(i + m - 1, 2) * ip(i + m, 6);
  return -fr(num, den);
}

Rational eval_Y1(long m, long i) {
  return fr(Int(m + i + 1) * (4 * m + 3) * (4 * m + 5),
            4 * Int(m + 2 - i) * (m + 1) * (m + 2));
}

Rational eval_Y2(long m, long i) {
  return fr(Int(-4 * i * i + 8 * m * m + 24 * m + 19),
            2 * Int(m + 2 - i) * (m + 2));
}

Rational eval_Y3_def(const PolyTable& t, long m, long i) {
  return 2 * eval_U(t, m + 1, i) * eval_Y2(m, i) + eval_V(t, m + 1, i);
}

Rational eval_Y3_closed(const PolyTable& t, long m, long i) {
  Int num = Int(m + 2) * t.get("Y5").eval(m, i);
  return fr(num, Int(m + i) * i * (m + i + 1));
}

Rational eval_Y4_def(const PolyTable& t, long m, long i) {
  Rational y3 = eval_Y3_def(t, m, i);
  return y3 * y3 - delta2_def(t, m + 1, i);
}

Rational eval_Y4_closed(const PolyTable& t, long m, long i) {
  Int num = ip(m + 2, 2) * t.get("Y6").eval(m, i);
  Int den = ip(m + 1 + i, 2) * ip(i, 2) * (m + i);
  return fr(num, den);
}

Rational eval_Z1(const PolyTable& t, long m, long i) {
  return 4 * eval_U(t, m, i) * eval_U(t, m + 1, i) * eval_Y1(m, i) +
         eval_V(t, m, i) * eval_Y3_def(t, m, i);
}

Rational eval_Z2(const PolyTable& t, long m, long i) {
  Rational z1 = eval_Z1(t, m, i);
  return delta2_def(t, m, i) * delta2_def(t, m + 1, i) - z1 * z1;
}

Rational eval_Z3(const PolyTable& t, long m, long i) {
  Rational y3 = eval_Y3_def(t, m, i), v = eval_V(t, m, i);
  return y3 * y3 * delta2_def(t, m, i) - v * v * delta2_def(t, m + 1, i);
}

Rational eval_Z4(const PolyTable& t, long m, long i) {
  Rational y3 = eval_Y3_def(t, m, i), v = eval_V(t, m, i);
  Rational z1 = eval_Z1(t, m, i);
  Rational d2 = delta2_def(t, m, i), d2n = delta2_def(t, m + 1, i);
  return v * v * d2n + y3 * y3 * d2 - z1 * z1 - d2 * d2n;
}

Rational eval_Z5(const PolyTable& t, long m, long i) {
  return 2 * eval_Z1(t, m, i) - 2 * eval_V(t, m, i) * eval_Y3_def(t, m, i);
}

Rational eval_Z6(const PolyTable& t, long m, long i) {
  Rational z5 = eval_Z5(t, m, i), z4 = eval_Z4(t, m, i);
  return z5 * z5 * delta2_def(t, m, i) * delta2_def(t, m + 1, i) - z4 * z4;
}

SurdExpr eval_L(const PolyTable& t, long m, long i) {
  Rational mc(t.get("M1").eval(m, i));
  Rational la(t.get("La").eval(m, i));
  Rational lb(t.get("Lb").eval(m, i));
  return SurdExpr(2 * mc * la, 2 * mc * lb, Int(4 * i * i + 4 * m + 1));
}

Rational eval_named(const PolyTable& t, const std::string& name, long m,
                    long i) {
  if (t.all().count(name)) return Rational(t.get(name).eval(m, i));
  if (name == "A") return eval_A(t, m, i);
  if (name == "B") return eval_B(t, m, i);
  if (name == "C") return eval_C(t, m, i);
  if (name == "U") return eval_U(t, m, i);
  if (name == "V") return eval_V(t, m, i);
  if (name == "W") return eval_W(t, m, i);
  if (name == "Delta1") return delta1_def(t, m, i);
  if (name == "Delta2") return delta2_def(t, m, i);
  if (name == "A1") return eval_A1(m, i);
  if (name == "B1") return eval_B1(m, i);
  if (name == "C1") return eval_C1(m, i);
  if (name == "D1") return eval_D1_def(t, m, i);
  if (name == "E1") return eval_E1_def(t, m, i);
  if (name == "F1") return eval_F1_def(t, m, i);
  if (name == "Y1") return eval_Y1(m, i);
  if (name == "Y2") return eval_Y2(m, i);
  if (name == "Y3") return eval_Y3_def(t, m, i);
  if (name == "Y4") return eval_Y4_def(t, m, i);
  if (name == "Z1") return eval_Z1(t, m, i);
  if (name == "Z2") return eval_Z2(t, m, i);
  if (name == "Z3") return eval_Z3(t, m, i);
  if (name == "Z4") return eval_Z4(t, m, i);
  if (name == "Z5") return eval_Z5(t, m, i);
  if (name == "Z6") return eval_Z6(t, m, i);
  throw std::out_of_range("eval_named: unknown name " + name);
}

// ---- identity registry ----

namespace {

bool rational_eq(const Rational& lhs, const Rational& rhs, std::string* r) {
  if (lhs == rhs) return true;
  if (r) *r = to_string(lhs - rhs);
  return false;
}

Rational kp_expr(long m, long i) {
  return fr(Int(4 * m * m + 7 * m + i + 3), Int(m + 1) * (m + 1 - i));
}

bool interior(long m, long i) { return i >= 1 && i <= m - 1; }

std::vector<IdentityCheck> make_identity_checks() {
  std::vector<IdentityCheck> v;

  v.push_back({"delta1_closed",
               [](const PolyTable& t, long m, long i, std::string* r) {
                 return rational_eq(delta1_def(t, m, i), delta1_closed(t, m, i), r);
               },
               interior, 40});

  v.push_back({"delta2_closed",
               [](const PolyTable& t, long m, long i, std::string* r) {
                 return rational_eq(delta2_def(t, m, i), delta2_closed(t, m, i), r);
               },
               interior, 40});

  v.push_back({"K_diff",
               [](const PolyTable& t, long m, long i, std::string* r) {
                 Rational inner = eval_A(t, m, i) * kp_expr(m, i) + eval_B(t, m, i);
                 Rational lhs = delta1_def(t, m, i) - inner * inner;
                 Rational rhs = fr(ip(m + 1 - i, 2) * ip(m + 1, 2) *
                                       t.get("K").eval(m, i),
                                   ip(i, 2) * ip(i + m, 2) * ip(i + 1, 2));
                 return rational_eq(lhs, rhs, r);
               },
               interior, 40});

  v.push_back({"L_diff",
               [](const PolyTable& t, long m, long i, std::string* r) {
                 // both sides carry sqrt(4i^2+4m+1); match p and q parts
                 Int c1 = Int(4 * i * i + 4 * m + 1);
                 Rational a = eval_A(t, m, i), b = eval_B(t, m, i);
                 Rational den = fr(1, Int(m + 1) * (m + 1 - i));
                 SurdExpr inner(a * Rational(Int(4 * m * m + 7 * m - 2 * i * i + 3)) * den + b,
                                a * rat(i) * den, c1);
                 SurdExpr lhs = SurdExpr::from_rational(delta1_def(t, m, i)) -
                                inner * inner;
                 Rational scale = fr(ip(m + 1 - i, 2) * ip(m + 1, 2),
                                     ip(i, 2) * Int(i + m) * ip(i + 1, 2));
                 SurdExpr rhs = scale * eval_L(t, m, i);
                 if (lhs == rhs) return true;
                 if (r) *r = to_string(lhs.p - rhs.p) + " + sqrt-part " +
                             to_string(lhs.q - rhs.q);
                 return false;
               },
               interior, 40});

  v.push_back({"Lpos_witness",
               [](const PolyTable& t, long m, long i, std::string* r) {
                 Rational la(t.get("La").eval(m, i)), lb(t.get("Lb").eval(m, i));
                 Rational lhs = lb * lb * eval_C1(m, i) - la * la;
                 return rational_eq(lhs, Rational(t.get("LposW").eval(m, i)), r);
               },
               interior, 40});

  v.push_back({"D1_closed",
               [](const PolyTable& t, long m, long i, std::string* r) {
                 return rational_eq(eval_D1_def(t, m, i), eval_D1_closed(m, i), r);
               },
               interior, 40});

  v.push_back({"E1_fact",
               [](const PolyTable& t, long m, long i, std::string* r) {
                 return rational_eq(eval_E1_def(t, m, i), eval_E1_closed(t, m, i), r);
               },
               interior, 40});

  v.push_back({"F1_fact",
               [](const PolyTable& t, long m, long i, std::string* r) {
                 return rational_eq(eval_F1_def(t, m, i), eval_F1_closed(t, m, i), r);
               },
               interior, 60});

  v.push_back({"P_identity",
               [](const PolyTable& t, long m, long i, std::string* r) {
                 Rational lhs = eval_U(t, m, i) * kp_expr(m, i) + eval_V(t, m, i);
                 Rational rhs = fr(Int(m + 1) * t.get("P").eval(m, i),
                                   ip(m + i, 2) * (m + i - 1));
                 return rational_eq(lhs, rhs, r);
               },
               interior, 40});

  v.push_back({"G1H1_identity",
               [](const PolyTable& t, long m, long i, std::string* r) {
                 Rational lhs0 = eval_U(t, m, i) * kp_expr(m, i) + eval_V(t, m, i);
                 Rational lhs = lhs0 * lhs0 - delta2_def(t, m, i);
                 Rational rhs = fr(4 * ip(m + 1, 2) * t.get("G1").eval(m, i) *
                                       t.get("H1").eval(m, i),
                                   ip(m + i, 4) * Int(i + m - 1) * i);
                 return rational_eq(lhs, rhs, r);
               },
               interior, 40});

  v.push_back({"Y3_closed",
               [](const PolyTable& t, long m, long i, std::string* r) {
                 return rational_eq(eval_Y3_def(t, m, i), eval_Y3_closed(t, m, i), r);
               },
               interior, 40});

  v.push_back({"Y4_closed",
               [](const PolyTable& t, long m, long i, std::string* r) {
                 return rational_eq(eval_Y4_def(t, m, i), eval_Y4_closed(t, m, i), r);
               },
               interior, 50});

  return v;
}

}  // namespace

const std::vector<IdentityCheck>& identity_checks() {
  static const std::vector<IdentityCheck> v = make_identity_checks();
  return v;
}

const IdentityCheck& identity_check(const std::string& name) {
  for (const auto& c : identity_checks())
    if (c.name == name) return c;
  throw std::out_of_range("identity_check: unknown identity " + name);
}

VerificationReport verify_identity(const PolyTable& t, const IdentityCheck& c,
                                   long grid_m_max) {
  if (grid_m_max <= 0) grid_m_max = c.default_grid_m_max;
  VerificationReport rep;
  rep.theorem = c.name;
  rep.m = grid_m_max;
  for (long m = 3; m <= grid_m_max; ++m)
    for (long i = 1; i <= m - 1; ++i) {
      if (!c.domain(m, i)) continue;
      ++rep.checked;
      std::string resid;
      if (!c.at_point(t, m, i, &resid))
        rep.fail(i, "m=" + std::to_string(m) + " residual", resid);
    }
  return rep;
}

// ---- sign claims ----

namespace {

bool case1_region(long m, long i) {
  return i >= 1 && i <= m - 1 && i_lt_case1_threshold(i, m);
}
bool case2_region(long m, long i) {
  return i >= 1 && i <= m - 1 && !i_lt_case1_threshold(i, m) &&
         i_le_half_m2_cbrt(i, m);
}
bool case3_region(long m, long i) {
  return i >= 1 && i <= m - 1 && !i_le_half_m2_cbrt(i, m) && !i_ge_m23(i, m);
}
bool case4_region(long m, long i) {
  return i >= 1 && i <= m - 4 && i_ge_m23(i, m);
}
bool x_pos_region(long m, long i) {
  return i >= 1 && i <= m - 1 && i_ge_m23(i, m);
}

std::vector<SignClaim> make_sign_claims() {
  std::vector<SignClaim> v;
  auto poly = [](const char* name) {
    return [name](const PolyTable& t, long m, long i) {
      return Rational(t.get(name).eval(m, i));
    };
  };
  v.push_back({"G", +1, poly("G"), interior, 126});
  v.push_back({"H", +1, poly("H"), interior, 2});
  v.push_back({"Delta1", +1,
               [](const PolyTable& t, long m, long i) { return delta1_def(t, m, i); },
               interior, 126});
  v.push_back({"K", +1, poly("K"), interior, 2});
  v.push_back({"A_neg", -1,
               [](const PolyTable& t, long m, long i) { return eval_A(t, m, i); },
               [](long m, long i) { return i >= 1 && i <= m; }, 2});
  v.push_back({"U_pos", +1,
               [](const PolyTable& t, long m, long i) { return eval_U(t, m, i); },
               interior, 2});
  v.push_back({"V_neg", -1,
               [](const PolyTable& t, long m, long i) { return eval_V(t, m, i); },
               interior, 2});
  v.push_back({"S1", -1, poly("S1"), case1_region, 15});
  v.push_back({"N1", -1, poly("N1"), case1_region, 15});
  v.push_back({"E1", +1,
               [](const PolyTable& t, long m, long i) { return eval_E1_def(t, m, i); },
               case1_region, 15});
  v.push_back({"F1", +1,
               [](const PolyTable& t, long m, long i) { return eval_F1_def(t, m, i); },
               case1_region, 15});
  v.push_back({"X_neg", -1, poly("X"), case2_region, 50});
  v.push_back({"X_pos", +1, poly("X"), x_pos_region, 19});
  v.push_back({"P", +1, poly("P"), case3_region, 2});
  v.push_back({"G1", +1, poly("G1"), case3_region, 2});
  v.push_back({"H1", +1, poly("H1"), case3_region, 2});
  v.push_back({"D1", +1,
               [](const PolyTable& t, long m, long i) { return eval_D1_def(t, m, i); },
               [](long m, long i) { return i >= 1 && i <= m; }, 2});
  v.push_back({"Y1", +1,
               [](const PolyTable&, long m, long i) { return eval_Y1(m, i); },
               interior, 2});
  v.push_back({"Y2", +1,
               [](const PolyTable&, long m, long i) { return eval_Y2(m, i); },
               interior, 2});
  v.push_back({"Y3", +1,
               [](const PolyTable& t, long m, long i) { return eval_Y3_def(t, m, i); },
               interior, 2});
  v.push_back({"Y4", +1,
               [](const PolyTable& t, long m, long i) { return eval_Y4_def(t, m, i); },
               interior, 2});
  v.push_back({"Z1", -1,
               [](const PolyTable& t, long m, long i) { return eval_Z1(t, m, i); },
               case4_region, 273});
  v.push_back({"Z2", -1,
               [](const PolyTable& t, long m, long i) { return eval_Z2(t, m, i); },
               case4_region, 273});
  v.push_back({"Z3", -1,
               [](const PolyTable& t, long m, long i) { return eval_Z3(t, m, i); },
               case4_region, 273});
  v.push_back({"Z4", +1,
               [](const PolyTable& t, long m, long i) { return eval_Z4(t, m, i); },
               case4_region, 273});
  v.push_back({"Z5", +1,
               [](const PolyTable& t, long m, long i) { return eval_Z5(t, m, i); },
               case4_region, 273});
  v.push_back({"Z6", +1,
               [](const PolyTable& t, long m, long i) { return eval_Z6(t, m, i); },
               case4_region, 273});
  v.push_back({"g", +1, poly("g"),
               [](long, long i) { return i == 0; }, 273});
  v.push_back({"f", +1, poly("f"),
               [](long, long i) { return i == 0; }, 273});
  return v;
}

}  // namespace

const std::vector<SignClaim>& sign_claims() {
  static const std::vector<SignClaim> v = make_sign_claims();
  return v;
}

const SignClaim& sign_claim(const std::string& name) {
  for (const auto& c : sign_claims())
    if (c.name == name) return c;
  throw std::out_of_range("sign_claim: unknown claim " + name);
}

VerificationReport verify_sign_claim(const PolyTable& t, const SignClaim& c,
                                     const std::vector<long>& ms) {
  VerificationReport rep;
  rep.theorem = "sign:" + c.name;
  bool have_witness = false;
  Rational min_mag;
  long wm = 0, wi = 0;
  for (long m : ms) {
    if (m < c.m_min) continue;
    rep.m = m;
    for (long i = 0; i <= m; ++i) {
      if (!c.domain(m, i)) continue;
      ++rep.checked;
      Rational val = c.value(t, m, i);
      if (sgn(val) != c.expected_sign)
        rep.fail(i, "m=" + std::to_string(m), to_string(val));
      Rational mag = abs(val);
      if (!have_witness || mag < min_mag) {
        have_witness = true;
        min_mag = mag;
        wm = m;
        wi = i;
      }
    }
  }
  if (have_witness)
    rep.note = "min |value| = " + to_string(min_mag) + " at (m,i)=(" +
               std::to_string(wm) + "," + std::to_string(wi) + ")";
  return rep;
}

VerificationReport verify_L_positive(const PolyTable& t, long m) {
  VerificationReport rep;
  rep.theorem = "sign:L";
  rep.m = m;
  for (long i = 1; i <= m - 1; ++i) {
    ++rep.checked;
    if (surd_sign(eval_L(t, m, i)) != +1)
      rep.fail(i, "L(m,i)", "nonpositive");
  }
  return rep;
}

VerificationReport lemma32_case_structure(const PolyTable& t, long m) {
  VerificationReport rep;
  rep.theorem = "lemma32_cases";
  rep.m = m;
  for (long i = 1; i <= m - 1; ++i) {
    ++rep.checked;
    Int i3 = ip(i, 3);
    Int m2 = ip(m, 2);
    // term groups of G
    Rational t1 = Rational(m2 * (2 * i3 - m2) * (2 * i3 - m2));
    Rational t2 = Rational(56 * ip(i, 6) * m - 24 * i3 * ip(m, 3));
    Rational t3 = Rational(20 * ip(i, 5) * m2 - 2 * ip(i, 2) * ip(m, 4));
    bool ok = true;
    std::string which;
    if (7 * i3 >= 3 * m2) {
      // Case 1: each group nonnegative (third strictly positive)
      ok = t1 >= 0 && t2 >= 0 && t3 > 0;
      which = "case1";
    } else if (10 * i3 > m2) {
      // Case 2
      ok = t1 >= fr(ip(m, 6), 49) && t2 >= -fr(18 * ip(m, 5), 7) && t3 > 0;
      if (m >= 126) {
        // the combined bound m^6/49 - 18 m^5/7 is exactly zero at m = 126;
        // strict positivity of G comes from the third group
        Rational bound = fr(ip(m, 6), 49) - fr(18 * ip(m, 5), 7);
        ok = ok && bound >= 0 &&
             Rational(t.get("G").eval(m, i)) >= bound;
      }
      which = "case2";
    } else {
      // Case 3: 1 <= i^3 <= m^2/10
      ok = t1 >= fr(16 * ip(m, 6), 25) && t2 >= -fr(46 * ip(m, 5), 25) &&
           gt_neg_two_m163(t3, m);
      // 16/25 m^6 - 46/25 m^5 - 2 m^{16/3} > 0 for m >= 10:
      // cube (16m-46) m^5 / 25 > 2 m^{16/3}  =>  (16m-46)^3 > 125000 m
      if (m >= 10) ok = ok && ip(16 * m - 46, 3) > 125000 * Int(m);
      which = "case3";
    }
    if (!ok) rep.fail(i, which, "group inequality failed");
    if (Rational(t.get("G").eval(m, i)) <= 0) rep.fail(i, "G", "nonpositive");
  }
  return rep;
}

}  // namespace bm
