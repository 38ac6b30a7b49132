#include "peeltri/coeffs.hpp"

#include "peeltri/series.hpp"

namespace peeltri::coeffs {

QuadNum c_psht(int p, const Rat& h) {
  if (h < 0 || h > Rat(1, 4)) throw OutOfRange("c_psht: h must lie in [0, 1/4]");
  if (p < 1) throw OutOfRange("c_psht: p must be >= 1");
  Rat sum = 0;
  Rat hq = 1;
  for (int q = 0; q < p; ++q) {
    sum += binomial(static_cast<unsigned long>(2 * q), static_cast<unsigned long>(q)) * hq;
    hq *= h;
  }
  return QuadNum::s_pow(1 - p, h) * sum;
}

CoeffVector c_recursive(const Rat& h, const Rat& gamma, int P) {
  if (h < 0 || h > Rat(1, 4)) throw OutOfRange("c_recursive: h must lie in [0, 1/4]");
  if (gamma < 0 || gamma > 1) throw OutOfRange("c_recursive: gamma must lie in [0, 1]");
  if (P < 1) throw OutOfRange("c_recursive: P must be >= 1");
  std::vector<QuadNum> Z(static_cast<size_t>(P) + 1);
  for (int i = 1; i <= P; ++i) Z[static_cast<size_t>(i)] = series::Z_p_at(h, i);
  CoeffVector out{h, gamma, std::vector<QuadNum>(static_cast<size_t>(P) + 1)};
  out.c[1] = QuadNum::rational(1, h);
  for (int p = 1; p < P; ++p) {
    QuadNum next = out.c[static_cast<size_t>(p)];
    for (int i = 0; i < p; ++i) {
      next -= Rat(2) * Z[static_cast<size_t>(i + 1)] * out.c[static_cast<size_t>(p - i)];
      next -= gamma * out.c[static_cast<size_t>(i + 1)] * out.c[static_cast<size_t>(p - i)];
    }
    out.c[static_cast<size_t>(p + 1)] = next;
  }
  return out;
}

PowerSeries<QuadNum> c_series(const Rat& h, const Rat& gamma, int P) {
  if (h < 0 || h > Rat(1, 4)) throw OutOfRange("c_series: h must lie in [0, 1/4]");
  if (gamma < 0 || gamma > 1) throw OutOfRange("c_series: gamma must lie in [0, 1]");
  if (P < 1) throw OutOfRange("c_series: P must be >= 1");
  if (gamma == 0) {
    PowerSeries<QuadNum> f(P);
    for (int p = 1; p <= P; ++p) f[p] = c_psht(p, h);
    return f;
  }
  QuadNum inv_s = QuadNum::s_pow(-1, h);
  PowerSeries<QuadNum> A(P), B(P);
  A[0] = QuadNum::rational(1, h);
  if (P >= 1) A[1] = -inv_s;
  B[0] = QuadNum::rational(1, h);
  if (P >= 1) B[1] = Rat(-4) * h * inv_s;
  PowerSeries<QuadNum> rad = A * A * B;
  if (P >= 1) rad[1] += QuadNum::rational(4 * gamma, h);
  PowerSeries<QuadNum> f = rad.sqrt1() - A * B.sqrt1();
  f *= QuadNum::rational(Rat(1) / (2 * gamma), h);
  return f;
}

CoeffVector c_genfun(const Rat& h, const Rat& gamma, int P) {
  PowerSeries<QuadNum> f = c_series(h, gamma, P);
  CoeffVector out{h, gamma, std::vector<QuadNum>(static_cast<size_t>(P) + 1)};
  for (int p = 1; p <= P; ++p) out.c[static_cast<size_t>(p)] = f[p];
  return out;
}

std::optional<int> find_negative_p(const Rat& h, const Rat& gamma, int p_cap) {
  if (p_cap < 1) throw OutOfRange("find_negative_p: cap must be >= 1");
  CoeffVector cv = c_recursive(h, gamma, p_cap);
  for (int p = 1; p <= p_cap; ++p)
    if (cv.C(p).sign() < 0) return p;
  return std::nullopt;
}

}  // namespace peeltri::coeffs
