#pragma once

#include <map>
#include <string>

#include "peeltri/quadnum.hpp"
#include "peeltri/rational.hpp"

namespace peeltri {

/// Exact finite sum  sum_i c_i * sqrt(m_i)  with rational c_i and distinct
/// squarefree positive integers m_i (m = 1 carries the rational part).
///
/// Values of QuadNum type over different h parameters do not share a quadratic
/// field; SurdSum is the common exact ring used when aggregating them
/// (mixtures, coefficient tables, residuals). Square roots of distinct
/// squarefree integers are linearly independent over Q, so the zero test is a
/// coefficient check; nonzero signs are settled by interval refinement.
class SurdSum {
 public:
  SurdSum() = default;
  SurdSum(const Rat& r) { add_term(r, 1); }
  SurdSum(long n) { add_term(Rat(n), 1); }
  SurdSum(const QuadNum& q);

  /// c * sqrt(radicand) for an arbitrary positive rational radicand.
  static SurdSum sqrt_of(const Rat& radicand, const Rat& coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Rational value; throws unless is_rational().
  Rat rational_value() const;

  SurdSum operator-() const;
  SurdSum& operator+=(const SurdSum& o);
  SurdSum& operator-=(const SurdSum& o);
  SurdSum& operator*=(const SurdSum& o);
  SurdSum& operator*=(const Rat& r);

  friend SurdSum operator+(SurdSum x, const SurdSum& y) { return x += y; }
  friend SurdSum operator-(SurdSum x, const SurdSum& y) { return x -= y; }
  friend SurdSum operator*(SurdSum x, const SurdSum& y) { return x *= y; }
  friend SurdSum operator*(SurdSum x, const Rat& y) { return x *= y; }
  friend SurdSum operator*(const Rat& y, SurdSum x) { return x *= y; }

  bool operator==(const SurdSum& o) const { return terms_ == o.terms_; }
  bool operator!=(const SurdSum& o) const { return !(*this == o); }

  /// Exact sign (-1, 0, +1).
  int sign() const;
  bool operator<(const SurdSum& o) const { return (*this - o).sign() < 0; }
  bool operator>(const SurdSum& o) const { return (*this - o).sign() > 0; }
  bool operator<=(const SurdSum& o) const { return (*this - o).sign() <= 0; }
  bool operator>=(const SurdSum& o) const { return (*this - o).sign() >= 0; }

  std::string exact_str() const;
  std::string decimal_str(int digits = 50) const;
  double to_double() const;

  const std::map<Int, Rat>& terms() const { return terms_; }

 private:
  void add_term(const Rat& coeff, const Int& squarefree_radicand);
  std::map<Int, Rat> terms_;
};

}  // namespace peeltri
