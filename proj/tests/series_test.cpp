#include <doctest.h>

#include "peeltri/series.hpp"

using namespace peeltri;
using namespace peeltri::series;

TEST_CASE("lambda of h and its critical value") {
  CHECK(lambda_of_h(0) == QuadNum(0));
  Rat h(1, 8);
  QuadNum lam = lambda_of_h(h);
  // lambda^2 (1+8h)^3 = h^2 exactly
  CHECK(lam * lam * QuadNum::rational(rat_pow(1 + 8 * h, 3), h) == QuadNum::rational(h * h, h));
  // lambda_c = 1/(12 sqrt(3)) = sqrt(3)/36
  CHECK(lambda_of_h(Rat(1, 4)) == QuadNum(Rat(0), Rat(1, 36), Rat(1, 4)));
}

TEST_CASE("series inversion: h as a function of lambda") {
  PowerSeries<Rat> hs = h_series_of_lambda(8);
  CHECK(hs[0] == 0);
  CHECK(hs[1] == 1);
  CHECK(hs[2] == 12);
  CHECK(hs[3] == 168);
  // composing back gives the identity
  PowerSeries<Rat> ls = lambda_series(8);
  PowerSeries<Rat> id = ls.compose(hs);
  CHECK(id[0] == 0);
  CHECK(id[1] == 1);
  for (int k = 2; k <= 8; ++k) CHECK(id[k] == 0);
}

TEST_CASE("triangulation counts") {
  CHECK(tau(0, 1) == 0);
  CHECK(tau(0, 2) == 0);
  CHECK(tau(1, 1) == 1);
  CHECK(tau(2, 1) == 4);
  CHECK(tau(3, 1) == 32);
  CHECK(tau(4, 1) == 336);
  CHECK(tau(1, 2) == 1);  // the degenerate 2-gon closure
  CHECK(tau(2, 2) == 3);
  // one-face fillings of the (p)-gon: tau_{p-1}(p) = Catalan(p-2)
  int catalan[] = {1, 1, 2, 5, 14, 42};
  for (int p = 2; p <= 7; ++p) CHECK(tau(p - 1, p) == catalan[p - 2]);
}

TEST_CASE("disk function closed form and recursion") {
  Rat h(1, 8);
  // Z_1 = (1/2)(1 - (1+2h)/s)
  QuadNum expect =
      (QuadNum(1) - QuadNum::rational(1 + 2 * h, h) * QuadNum::s_pow(-1, h)) * Rat(1, 2);
  CHECK(Z_p_at(h, 1) == expect);
  // Z_p = Z_{p+1} + sum_{i=1}^{p} Z_i Z_{p+1-i} + lambda [p=2]
  for (int p = 1; p <= 6; ++p) {
    QuadNum rhs = Z_p_at(h, p + 1);
    for (int i = 1; i <= p; ++i) rhs += Z_p_at(h, i) * Z_p_at(h, p + 1 - i);
    if (p == 2) rhs += lambda_of_h(h);
    CHECK(Z_p_at(h, p) == rhs);
  }
  CHECK(Z_p_at(0, 1) == QuadNum(0));
  CHECK(Z_p_at(0, 5) == QuadNum(0));
}

TEST_CASE("bivariate expansion agrees with the evaluated closed form") {
  // sum_n tau_n(p) lambda^n at small h matches Z_p(h) to the truncation error:
  // compare the partial sum against the exact value numerically.
  ZBivariate zb = z_bivariate(3, 30);
  Rat h(1, 100);
  QuadNum lam = lambda_of_h(h);
  for (int p = 1; p <= 3; ++p) {
    QuadNum sum = QuadNum::rational(0, h);
    QuadNum lp = QuadNum::rational(1, h);
    for (int n = 0; n <= 30; ++n) {
      sum += lp * zb.Z(p)[n];
      lp *= lam;
    }
    // all coefficients are nonnegative, so the partial sum sits below the
    // closed form by the tail ~ (tau growth * lambda)^31 ~ 1e-21; compare
    // exactly, not in doubles, whose cancellation noise is ~1e-17
    QuadNum diff = sum - Z_p_at(h, p);
    Int den = 1;
    for (int d = 0; d < 18; ++d) den *= 10;
    Rat tol(Int(1), den);
    CHECK(diff <= QuadNum::rational(0, h));
    CHECK(QuadNum::rational(-tol, h) < diff);
  }
}
