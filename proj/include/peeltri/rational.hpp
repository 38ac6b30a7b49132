#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace peeltri {

using Rat = mpq_class;
using Int = mpz_class;

struct OutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses "a/b" or "a" (decimal integers, optional sign) into an exact rational.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_pow(const Rat& base, unsigned long e) {
  Rat r = 1;
  Rat b = base;
  unsigned long k = e;
  while (k) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

/// Exact binomial(1/2, k) as a rational; used by the square-root binomial series.
inline Rat binom_half(unsigned long k) {
  Rat r = 1;
  Rat num = Rat(1, 2);
  for (unsigned long j = 0; j < k; ++j) {
    r *= num;
    r /= Rat(j + 1);
    num -= 1;
  }
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace peeltri
