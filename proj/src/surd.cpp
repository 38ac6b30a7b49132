#include "peeltri/surd.hpp"

#include <mpfr.h>

#include <cmath>
#include <sstream>

namespace peeltri {

namespace {

/// Writes n = square * squarefree; requires full factorization by trial
/// division. Radicands in this project stay tiny (products of 1+8h values).
void squarefree_split(const Int& n, Int& square_root, Int& squarefree) {
  if (n <= 0) throw std::invalid_argument("squarefree_split: radicand must be positive");
  Int m = n;
  square_root = 1;
  squarefree = 1;
  Int p = 2;
  while (p * p <= m) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) {
      for (unsigned k = 0; k < e / 2; ++k) square_root *= p;
      if (e % 2) squarefree *= p;
    }
    p += (p == 2) ? 1 : 2;
    if (p > 2000000 && m > 1) throw std::runtime_error("squarefree_split: radicand too large to factor");
  }
  if (m > 1) squarefree *= m;
}

}  // namespace

void SurdSum::add_term(const Rat& coeff, const Int& m) {
  if (coeff == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SurdSum SurdSum::sqrt_of(const Rat& radicand, const Rat& coeff) {
  if (radicand < 0) throw std::invalid_argument("SurdSum: negative radicand");
  SurdSum s;
  if (radicand == 0 || coeff == 0) return s;
  // sqrt(p/q) = sqrt(p q) / q
  Int pq = radicand.get_num() * radicand.get_den();
  Int root, sf;
  squarefree_split(pq, root, sf);
  s.add_term(coeff * Rat(root) / Rat(radicand.get_den()), sf);
  return s;
}

SurdSum::SurdSum(const QuadNum& q) {
  add_term(q.a(), 1);
  if (q.b() != 0) *this += sqrt_of(q.disc(), q.b());
}

bool SurdSum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rat SurdSum::rational_value() const {
  if (terms_.empty()) return 0;
  if (!is_rational()) throw std::domain_error("SurdSum: value is irrational");
  return terms_.begin()->second;
}

SurdSum SurdSum::operator-() const {
  SurdSum r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
  for (const auto& [m, c] : o.terms_) add_term(c, m);
  return *this;
}

SurdSum& SurdSum::operator-=(const SurdSum& o) {
  for (const auto& [m, c] : o.terms_) add_term(-c, m);
  return *this;
}

SurdSum& SurdSum::operator*=(const Rat& r) {
  if (r == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= r;
  return *this;
}

SurdSum& SurdSum::operator*=(const SurdSum& o) {
  SurdSum r;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      // sqrt(m1) sqrt(m2) = g * sqrt(m1 m2 / g^2) with g = gcd(m1, m2)
      Int g;
      mpz_gcd(g.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
      Int m = (m1 / g) * (m2 / g);
      r.add_term(c1 * c2 * Rat(g), m);
    }
  }
  terms_ = std::move(r.terms_);
  return *this;
}

int SurdSum::sign() const {
  if (terms_.empty()) return 0;
  if (is_rational()) return sgn(terms_.begin()->second);
  // Nonzero by linear independence of square roots of distinct squarefree
  // integers; refine an interval enclosure until it excludes zero.
  for (mpfr_prec_t prec = 128;; prec *= 2) {
    mpfr_t lo, hi, t;
    mpfr_init2(lo, prec);
    mpfr_init2(hi, prec);
    mpfr_init2(t, prec);
    mpfr_set_zero(lo, 0);
    mpfr_set_zero(hi, 0);
    for (const auto& [m, c] : terms_) {
      // lower bound contribution
      mpfr_set_z(t, m.get_mpz_t(), c > 0 ? MPFR_RNDD : MPFR_RNDU);
      mpfr_sqrt(t, t, c > 0 ? MPFR_RNDD : MPFR_RNDU);
      mpfr_mul_q(t, t, c.get_mpq_t(), MPFR_RNDD);
      mpfr_add(lo, lo, t, MPFR_RNDD);
      mpfr_set_z(t, m.get_mpz_t(), c > 0 ? MPFR_RNDU : MPFR_RNDD);
      mpfr_sqrt(t, t, c > 0 ? MPFR_RNDU : MPFR_RNDD);
      mpfr_mul_q(t, t, c.get_mpq_t(), MPFR_RNDU);
      mpfr_add(hi, hi, t, MPFR_RNDU);
    }
    int result = 0;
    bool decided = false;
    if (mpfr_sgn(lo) > 0) {
      result = 1;
      decided = true;
    } else if (mpfr_sgn(hi) < 0) {
      result = -1;
      decided = true;
    }
    mpfr_clear(lo);
    mpfr_clear(hi);
    mpfr_clear(t);
    if (decided) return result;
    if (prec > (1 << 22)) throw std::runtime_error("SurdSum::sign: interval refinement did not converge");
  }
}

std::string SurdSum::exact_str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    Rat ac = abs(c);
    if (m == 1) {
      os << rat_str(ac);
    } else {
      if (ac != 1) os << "(" << rat_str(ac) << ")*";
      os << "sqrt(" << m.get_str() << ")";
    }
    first = false;
  }
  return os.str();
}

std::string SurdSum::decimal_str(int digits) const {
  mpfr_prec_t prec = 512;
  mpfr_t x, t;
  mpfr_init2(x, prec);
  mpfr_init2(t, prec);
  mpfr_set_zero(x, 0);
  for (const auto& [m, c] : terms_) {
    mpfr_set_z(t, m.get_mpz_t(), MPFR_RNDN);
    mpfr_sqrt(t, t, MPFR_RNDN);
    mpfr_mul_q(t, t, c.get_mpq_t(), MPFR_RNDN);
    mpfr_add(x, x, t, MPFR_RNDN);
  }
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, x);
  std::string out(buf);
  mpfr_free_str(buf);
  mpfr_clear(x);
  mpfr_clear(t);
  return out;
}

double SurdSum::to_double() const {
  double v = 0;
  for (const auto& [m, c] : terms_) v += c.get_d() * std::sqrt(m.get_d());
  return v;
}

}  // namespace peeltri
