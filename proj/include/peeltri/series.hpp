#pragma once

#include <vector>

#include "peeltri/powerseries.hpp"
#include "peeltri/quadnum.hpp"
#include "peeltri/rational.hpp"

namespace peeltri::series {

struct NonIntegralCoefficient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// lambda = h / (1+8h)^{3/2} = h*sqrt(1+8h) / (1+8h)^2, exact in Q(sqrt(1+8h)).
/// Requires 0 <= h <= 1/4; h = 1/4 gives lambda_c = 1/(12 sqrt(3)).
QuadNum lambda_of_h(const Rat& h);

/// lambda as a power series in h, exact to the given order.
PowerSeries<Rat> lambda_series(int order);

/// Compositional inverse of lambda(h): h as a series in lambda.
/// h = lambda + 12 lambda^2 + 168 lambda^3 + ...
PowerSeries<Rat> h_series_of_lambda(int order);

/// The disk generating function expanded in both variables:
/// zp[p] (1 <= p <= order_x) is Z_p as a series in lambda to order_lambda,
/// whose lambda^n coefficient is tau_n(p).
struct ZBivariate {
  int order_x = 0;
  int order_lambda = 0;
  std::vector<PowerSeries<Rat>> zp;  // zp[p], index 0 unused

  const PowerSeries<Rat>& Z(int p) const { return zp.at(static_cast<size_t>(p)); }
};
ZBivariate z_bivariate(int order_x, int order_lambda);

/// Z_p(lambda) at lambda = lambda(h), exact in Q(sqrt(1+8h)).
/// Closed form: Z_p = (1/2)([p=1] + d_p - d_{p-1}/s) with
/// d_p = binom(1/2,p)(-4h/s)^p and s = sqrt(1+8h).
QuadNum Z_p_at(const Rat& h, int p);

/// Number of triangulations of the p-gon with volume n (n+1 vertices).
/// Extracted from z_bivariate; throws NonIntegralCoefficient if the exact
/// rational coefficient is not an integer (which would indicate a bug).
Int tau(int n, int p);

}  // namespace peeltri::series
