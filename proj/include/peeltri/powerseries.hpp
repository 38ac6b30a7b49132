#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace peeltri {

/// Truncated univariate power series with exact coefficients over a field K
/// (K is Rat or QuadNum). The truncation order is explicit and tracked:
/// a series of order N carries coefficients of x^0..x^N and all arithmetic is
/// exact modulo x^{N+1}.
template <class K>
class PowerSeries {
 public:
  explicit PowerSeries(int order) : c_(static_cast<size_t>(order) + 1) {
    if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
  }
  PowerSeries(int order, std::vector<K> coeffs) : PowerSeries(order) {
    for (size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = coeffs[i];
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const K& operator[](int i) const { return c_.at(static_cast<size_t>(i)); }
  K& operator[](int i) { return c_.at(static_cast<size_t>(i)); }

  static PowerSeries identity(int order) {
    PowerSeries s(order);
    if (order >= 1) s[1] = K(1);
    return s;
  }

  PowerSeries truncated(int order) const {
    PowerSeries s(order);
    for (int i = 0; i <= order && i <= this->order(); ++i) s[i] = c_[static_cast<size_t>(i)];
    return s;
  }

  PowerSeries operator-() const {
    PowerSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  PowerSeries& operator+=(const PowerSeries& o) {
    check_order(o);
    for (int i = 0; i <= order(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  PowerSeries& operator-=(const PowerSeries& o) {
    check_order(o);
    for (int i = 0; i <= order(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    a.check_order(b);
    int n = a.order();
    PowerSeries r(n);
    for (int i = 0; i <= n; ++i) {
      if (a[i] == K(0)) continue;
      for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
  }

  PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }
  PowerSeries& operator*=(const K& k) {
    for (auto& x : c_) x = x * k;
    return *this;
  }
  friend PowerSeries operator*(PowerSeries a, const K& k) { return a *= k; }
  friend PowerSeries operator*(const K& k, PowerSeries a) { return a *= k; }

  bool operator==(const PowerSeries& o) const { return c_ == o.c_; }

  /// Multiplicative inverse; requires a nonzero constant term.
  PowerSeries inverse() const {
    if (c_[0] == K(0)) throw std::domain_error("PowerSeries::inverse: zero constant term");
    int n = order();
    PowerSeries r(n);
    K inv0 = K(1) / c_[0];
    r[0] = inv0;
    for (int m = 1; m <= n; ++m) {
      K acc = K(0);
      for (int i = 1; i <= m; ++i) acc += c_[static_cast<size_t>(i)] * r[m - i];
      r[m] = -acc * inv0;
    }
    return r;
  }

  /// Square root with constant term 1; rejects any other constant term
  /// (the radicals handled here always have this shape).
  PowerSeries sqrt1() const {
    if (c_[0] != K(1)) throw std::domain_error("PowerSeries::sqrt1: constant term must be 1");
    int n = order();
    PowerSeries y(n);
    y[0] = K(1);
    K half = K(1) / K(2);
    for (int m = 1; m <= n; ++m) {
      K acc = c_[static_cast<size_t>(m)];
      for (int i = 1; i < m; ++i) acc -= y[i] * y[m - i];
      y[m] = acc * half;
    }
    return y;
  }

  /// Composition f(g(x)); g must have zero constant term.
  PowerSeries compose(const PowerSeries& g) const {
    if (g[0] != K(0)) throw std::domain_error("PowerSeries::compose: inner constant term must be 0");
    int n = order();
    PowerSeries r(n);
    for (int k = n; k >= 0; --k) {
      r = r * g;
      r[0] += c_[static_cast<size_t>(k)];
    }
    return r;
  }

  /// Compositional inverse by Lagrange inversion; requires f = x + O(x^2).
  PowerSeries reversion() const {
    if (c_[0] != K(0) || c_[1] != K(1))
      throw std::domain_error("PowerSeries::reversion: need f = x + O(x^2)");
    int n = order();
    PowerSeries g(n);
    if (n >= 1) g[1] = K(1);
    // q = x / f(x), as a series with constant term 1
    PowerSeries fx(n);
    for (int i = 0; i <= n - 1; ++i) fx[i] = c_[static_cast<size_t>(i + 1)];
    PowerSeries q = fx.inverse();
    PowerSeries qn = q;  // q^m incrementally
    for (int m = 2; m <= n; ++m) {
      qn = qn * q;
      // g_m = (1/m) [x^{m-1}] q^m
      g[m] = qn[m - 1] * (K(1) / K(m));
    }
    return g;
  }

 private:
  void check_order(const PowerSeries& o) const {
    if (order() != o.order())
      throw std::invalid_argument("PowerSeries: mixed truncation orders");
  }
  std::vector<K> c_;
};

}  // namespace peeltri
