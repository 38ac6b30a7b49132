#pragma once

#include <string>

#include "peeltri/rational.hpp"

namespace peeltri {

/// Exact element a + b*s of Q(s), s = sqrt(1+8h), for a fixed rational h in [0, 1/4].
///
/// s^2 = 1+8h is rewritten exactly, so arithmetic stays in the field and
/// equality / sign determination are exact even when s is irrational.
class QuadNum {
 public:
  QuadNum() : a_(0), b_(0), h_(0) {}
  QuadNum(int v) : a_(v), b_(0), h_(0) {}  // rational value, field-agnostic
  QuadNum(Rat a, Rat b, Rat h);

  /// Rational value in the field of parameter h.
  static QuadNum rational(Rat a, Rat h) { return QuadNum(std::move(a), 0, std::move(h)); }
  /// The generator s = sqrt(1+8h) itself.
  static QuadNum sqrt_disc(Rat h) { return QuadNum(0, 1, std::move(h)); }
  /// s^k for any integer k (k may be negative; s is invertible since 1+8h >= 1).
  static QuadNum s_pow(long k, const Rat& h);

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& h() const { return h_; }
  /// s^2 as a rational.
  Rat disc() const { return 1 + 8 * h_; }

  bool is_rational() const { return b_ == 0; }

  QuadNum operator-() const { return QuadNum(-a_, -b_, h_); }
  QuadNum& operator+=(const QuadNum& o);
  QuadNum& operator-=(const QuadNum& o);
  QuadNum& operator*=(const QuadNum& o);
  QuadNum& operator/=(const QuadNum& o);
  QuadNum& operator+=(const Rat& r) { a_ += r; return *this; }
  QuadNum& operator-=(const Rat& r) { a_ -= r; return *this; }
  QuadNum& operator*=(const Rat& r) { a_ *= r; b_ *= r; return *this; }
  QuadNum& operator/=(const Rat& r);

  friend QuadNum operator+(QuadNum x, const QuadNum& y) { return x += y; }
  friend QuadNum operator-(QuadNum x, const QuadNum& y) { return x -= y; }
  friend QuadNum operator*(QuadNum x, const QuadNum& y) { return x *= y; }
  friend QuadNum operator/(QuadNum x, const QuadNum& y) { return x /= y; }
  friend QuadNum operator+(QuadNum x, const Rat& y) { return x += y; }
  friend QuadNum operator-(QuadNum x, const Rat& y) { return x -= y; }
  friend QuadNum operator*(QuadNum x, const Rat& y) { return x *= y; }
  friend QuadNum operator/(QuadNum x, const Rat& y) { return x /= y; }
  friend QuadNum operator*(const Rat& y, QuadNum x) { return x *= y; }

  bool operator==(const QuadNum& o) const;
  bool operator!=(const QuadNum& o) const { return !(*this == o); }

  /// Exact sign of the real value (-1, 0, +1).
  int sign() const;
  bool operator<(const QuadNum& o) const { return (*this - o).sign() < 0; }
  bool operator>(const QuadNum& o) const { return (*this - o).sign() > 0; }
  bool operator<=(const QuadNum& o) const { return (*this - o).sign() <= 0; }
  bool operator>=(const QuadNum& o) const { return (*this - o).sign() >= 0; }

  QuadNum pow(unsigned long e) const;
  QuadNum inverse() const;

  /// Exact-form string "a + b*sqrt(d)" (or just "a" when b = 0).
  std::string exact_str() const;
  /// Decimal rendering with the given number of significant digits.
  std::string decimal_str(int digits = 50) const;
  double to_double() const;

 private:
  void check_same_field(const QuadNum& o);
  Rat a_, b_, h_;
};

}  // namespace peeltri
