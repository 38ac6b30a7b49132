#include "peeltri/series.hpp"

#include <map>
#include <mutex>

namespace peeltri::series {

QuadNum lambda_of_h(const Rat& h) {
  if (h < 0 || h > Rat(1, 4)) throw OutOfRange("lambda_of_h: h must lie in [0, 1/4]");
  Rat d = 1 + 8 * h;
  // h / d^{3/2} = h * s / d^2
  return QuadNum(0, h / (d * d), h);
}

namespace {

/// (1+8h)^{-1/2} as a series in h.
PowerSeries<Rat> inv_sqrt_disc_series(int order) {
  PowerSeries<Rat> u(order);
  // (1+x)^{-1/2} = sum binom(-1/2,k) x^k with x = 8h
  Rat coeff = 1;
  Rat pow8 = 1;
  for (int k = 0; k <= order; ++k) {
    u[k] = coeff * pow8;
    coeff *= Rat(-1, 2) - k;
    coeff /= k + 1;
    pow8 *= 8;
  }
  return u;
}

}  // namespace

PowerSeries<Rat> lambda_series(int order) {
  // h (1+8h)^{-3/2} = h * u^3 with u = (1+8h)^{-1/2}
  PowerSeries<Rat> u = inv_sqrt_disc_series(order);
  PowerSeries<Rat> u3 = u * u * u;
  PowerSeries<Rat> s(order);
  for (int i = 1; i <= order; ++i) s[i] = u3[i - 1];
  return s;
}

PowerSeries<Rat> h_series_of_lambda(int order) {
  return lambda_series(order).reversion();
}

ZBivariate z_bivariate(int order_x, int order_lambda) {
  if (order_x < 1 || order_lambda < 1) throw std::invalid_argument("z_bivariate: orders must be >= 1");
  ZBivariate out;
  out.order_x = order_x;
  out.order_lambda = order_lambda;
  int N = order_lambda;
  PowerSeries<Rat> u = inv_sqrt_disc_series(N);  // 1/s as series in h
  PowerSeries<Rat> hs = h_series_of_lambda(N);

  // d_p(h) = [x^p] sqrt(1 - 4h u x) = binom(1/2,p) (-4 h u)^p, series in h.
  // Z_p(h) = (1/2)([p=1] + d_p - u d_{p-1}).
  PowerSeries<Rat> mhu(N);  // -4 h u
  for (int i = 1; i <= N; ++i) mhu[i] = -4 * u[i - 1];
  out.zp.emplace_back(N);  // index 0 placeholder
  PowerSeries<Rat> d_prev(N);
  d_prev[0] = 1;  // d_0 = 1
  PowerSeries<Rat> pw = d_prev;  // (-4hu)^p incrementally
  for (int p = 1; p <= order_x; ++p) {
    pw = pw * mhu;
    PowerSeries<Rat> d_p = pw * binom_half(static_cast<unsigned long>(p));
    PowerSeries<Rat> zp_h = d_p - u * d_prev;
    if (p == 1) zp_h[0] += 1;
    zp_h *= Rat(1, 2);
    // substitute h = h(lambda)
    out.zp.push_back(zp_h.compose(hs));
    d_prev = d_p;
  }
  return out;
}

QuadNum Z_p_at(const Rat& h, int p) {
  if (h < 0 || h > Rat(1, 4)) throw OutOfRange("Z_p_at: h must lie in [0, 1/4]");
  if (p < 1) throw OutOfRange("Z_p_at: p must be >= 1");
  Rat m4h = -4 * h;
  QuadNum d_p = QuadNum::s_pow(-p, h) * (binom_half(static_cast<unsigned long>(p)) * rat_pow(m4h, static_cast<unsigned long>(p)));
  QuadNum d_pm1 = QuadNum::s_pow(-(p - 1), h) *
                  (binom_half(static_cast<unsigned long>(p - 1)) * rat_pow(m4h, static_cast<unsigned long>(p - 1)));
  QuadNum z = d_p - d_pm1 * QuadNum::s_pow(-1, h);
  if (p == 1) z += Rat(1);
  z *= Rat(1, 2);
  return z;
}

Int tau(int n, int p) {
  if (n < 0 || p < 1) throw OutOfRange("tau: need n >= 0, p >= 1");
  static std::mutex mu;
  static ZBivariate cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.order_x < p || cache.order_lambda < n) {
    int ox = std::max(cache.order_x, std::max(p, 4));
    int ol = std::max(cache.order_lambda, std::max(n, 8));
    cache = z_bivariate(ox, ol);
  }
  Rat c = cache.Z(p)[n];
  if (c.get_den() != 1) throw NonIntegralCoefficient("tau: non-integral coefficient");
  if (c < 0) throw NonIntegralCoefficient("tau: negative coefficient");
  return c.get_num();
}

}  // namespace peeltri::series
