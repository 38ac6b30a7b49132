#include "peeltri/quadnum.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdlib>

namespace peeltri {

QuadNum::QuadNum(Rat a, Rat b, Rat h) : a_(std::move(a)), b_(std::move(b)), h_(std::move(h)) {
  if (h_ < 0 || h_ > Rat(1, 4)) throw OutOfRange("QuadNum: h must lie in [0, 1/4]");
}

QuadNum QuadNum::s_pow(long k, const Rat& h) {
  Rat d = 1 + 8 * h;
  long q = k >= 0 ? k / 2 : -((-k + 1) / 2);
  bool odd = (k % 2) != 0;
  // s^k = d^floor(k/2) * s^(k mod 2)
  Rat dq = 1;
  if (q >= 0) {
    dq = rat_pow(d, static_cast<unsigned long>(q));
  } else {
    dq = 1 / rat_pow(d, static_cast<unsigned long>(-q));
  }
  if (!odd) return QuadNum(dq, 0, h);
  return QuadNum(0, dq, h);
}

void QuadNum::check_same_field(const QuadNum& o) {
  if (h_ == o.h_) return;
  if (b_ == 0) {
    h_ = o.h_;
    return;
  }
  if (o.b_ == 0) return;
  throw std::invalid_argument("QuadNum: mixing values from different quadratic fields");
}

QuadNum& QuadNum::operator+=(const QuadNum& o) {
  check_same_field(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& o) {
  check_same_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& o) {
  check_same_field(o);
  Rat d = disc();
  Rat na = a_ * o.a_ + b_ * o.b_ * d;
  Rat nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

QuadNum QuadNum::inverse() const {
  // (a + b s)^-1 = (a - b s) / (a^2 - b^2 d)
  Rat n = a_ * a_ - b_ * b_ * disc();
  if (n == 0) throw std::domain_error("QuadNum: division by zero");
  return QuadNum(a_ / n, -b_ / n, h_);
}

QuadNum& QuadNum::operator/=(const QuadNum& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

QuadNum& QuadNum::operator/=(const Rat& r) {
  if (r == 0) throw std::domain_error("QuadNum: division by zero");
  a_ /= r;
  b_ /= r;
  return *this;
}

bool QuadNum::operator==(const QuadNum& o) const {
  // Same numeric value; if the discriminant is a perfect rational square the
  // representation is not unique, so compare via the difference's sign.
  if (h_ == o.h_) {
    if (a_ == o.a_ && b_ == o.b_) return true;
  }
  QuadNum d = *this;
  d -= o;
  return d.sign() == 0;
}

int QuadNum::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;  // s > 0
  if (sa == sb) return sa;
  // a and b*s have opposite signs: compare a^2 with b^2 d.
  Rat diff = a_ * a_ - b_ * b_ * disc();
  int sd = sgn(diff);
  if (sd == 0) return 0;
  return sd > 0 ? sa : sb;
}

QuadNum QuadNum::pow(unsigned long e) const {
  QuadNum r = QuadNum::rational(1, h_);
  QuadNum base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

std::string QuadNum::exact_str() const {
  if (b_ == 0) return rat_str(a_);
  Rat d = disc();
  if (mpz_perfect_square_p(d.get_num().get_mpz_t()) &&
      mpz_perfect_square_p(d.get_den().get_mpz_t())) {
    Rat root(sqrt(d.get_num()), sqrt(d.get_den()));
    root.canonicalize();
    return rat_str(a_ + b_ * root);
  }
  std::string s;
  if (a_ != 0) s = rat_str(a_) + (b_ > 0 ? " + " : " - ");
  else if (b_ < 0) s = "-";
  Rat ab = abs(b_);
  if (ab != 1) s += "(" + rat_str(ab) + ")*";
  s += "sqrt(" + rat_str(disc()) + ")";
  return s;
}

namespace {

void mpfr_set_rat(mpfr_t x, const Rat& q, mpfr_rnd_t rnd) {
  mpfr_set_q(x, q.get_mpq_t(), rnd);
}

}  // namespace

std::string QuadNum::decimal_str(int digits) const {
  // 512 bits comfortably covers 50 significant digits plus slack for the
  // rational magnitudes met in this project.
  mpfr_prec_t prec = 512 + mpz_sizeinbase(a_.get_num().get_mpz_t(), 2) / 4;
  mpfr_t x, y;
  mpfr_init2(x, prec);
  mpfr_init2(y, prec);
  mpfr_set_rat(x, disc(), MPFR_RNDN);
  mpfr_sqrt(x, x, MPFR_RNDN);
  mpfr_mul_q(x, x, b_.get_mpq_t(), MPFR_RNDN);
  mpfr_set_rat(y, a_, MPFR_RNDN);
  mpfr_add(x, x, y, MPFR_RNDN);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, x);
  std::string out(buf);
  mpfr_free_str(buf);
  mpfr_clear(x);
  mpfr_clear(y);
  return out;
}

double QuadNum::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(disc().get_d());
}

}  // namespace peeltri
