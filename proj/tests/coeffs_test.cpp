#include <doctest.h>

#include "peeltri/coeffs.hpp"
#include "peeltri/series.hpp"
#include "peeltri/surd.hpp"

using namespace peeltri;
using namespace peeltri::coeffs;

TEST_CASE("small closed forms at h = 0") {
  for (Rat g : {Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1)}) {
    CoeffVector cv = c_recursive(0, g, 3);
    CHECK(cv.C(1) == QuadNum::rational(1, 0));
    CHECK(cv.C(2) == QuadNum::rational(1 - g, 0));
    CHECK(cv.C(3) == QuadNum::rational((1 - g) * (1 - 2 * g), 0));
    CoeffVector cg = c_genfun(0, g, 3);
    CHECK(cg.c == cv.c);
  }
}

TEST_CASE("recursion equals generating function equals normalized closed form") {
  for (Rat h : {Rat(1, 16), Rat(1, 8), Rat(1, 4)}) {
    CoeffVector cr = c_recursive(h, Rat(1, 2), 12);
    CoeffVector cg = c_genfun(h, Rat(1, 2), 12);
    for (int p = 1; p <= 12; ++p) CHECK(cr.C(p) == cg.C(p));
    CoeffVector c0 = c_recursive(h, 0, 12);
    for (int p = 1; p <= 12; ++p) CHECK(c0.C(p) == c_psht(p, h));
  }
  CHECK(c_psht(2, Rat(1, 8)) == QuadNum(0, Rat(5, 8), Rat(1, 8)));  // (5/8) sqrt(2)
}

TEST_CASE("step-law normalization from the closed forms") {
  // C_q = C_{q+1} + 2 sum_{i=0}^{q-1} Z_{i+1} C_{q-i} with both sides from
  // independent closed formulas; this is the sampler's exact normalization.
  for (Rat h : {Rat(0), Rat(1, 8), Rat(1, 4)}) {
    std::vector<QuadNum> C(22), Z(21);
    for (int p = 1; p <= 21; ++p) C[static_cast<size_t>(p - 1) + 1] = c_psht(p, h);
    for (int p = 1; p <= 20; ++p) Z[static_cast<size_t>(p)] = series::Z_p_at(h, p);
    for (int q = 1; q <= 20; ++q) {
      QuadNum rhs = C[static_cast<size_t>(q + 1)];
      for (int i = 0; i < q; ++i)
        rhs += Rat(2) * Z[static_cast<size_t>(i + 1)] * C[static_cast<size_t>(q - i)];
      CHECK(rhs == C[static_cast<size_t>(q)]);
    }
  }
}

TEST_CASE("negativity dichotomy") {
  CHECK(find_negative_p(0, Rat(3, 4), 10) == 3);
  CHECK(find_negative_p(Rat(1, 8), Rat(1, 4), 200) == 4);
  CHECK(!find_negative_p(Rat(1, 4), 0, 200).has_value());
  CHECK(!find_negative_p(0, 0, 200).has_value());
}

TEST_CASE("third derivative of the one-hole series is negative at (1/4, 9/10)") {
  // Partial sums of sum_p p(p-1)(p-2) C_p(0, 1/4) x^{p-3} at x = 9/10, with
  // the remainder measured exactly against the closed-form limit
  //   6 (1-g)(1-2g-x) / ((1-x)^2 + 4gx)^{5/2} = -180000 sqrt(91) / 753571.
  SurdSum limit = SurdSum::sqrt_of(91, Rat(-180000, 753571));
  CHECK(limit.sign() == -1);
  PowerSeries<QuadNum> cs = c_series(0, Rat(1, 4), 160);
  Rat x(9, 10);
  Rat partial = 0;
  Rat xp = 1;
  for (int p = 3; p <= 160; ++p) {
    Rat cp = cs[p].a() + cs[p].b();  // h = 0: the field generator is sqrt(1) = 1
    partial += Rat(p) * (p - 1) * (p - 2) * cp * xp;
    xp *= x;
  }
  CHECK(partial < 0);
  SurdSum rem = SurdSum(partial) - limit;
  if (rem.sign() < 0) rem = -rem;
  CHECK(rem < SurdSum(Rat(1, 1000)));
}
