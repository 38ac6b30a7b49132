#pragma once

#include <optional>
#include <vector>

#include "peeltri/powerseries.hpp"
#include "peeltri/quadnum.hpp"
#include "peeltri/rational.hpp"

namespace peeltri::coeffs {

/// C_1..C_P at a parameter point, exact in Q(sqrt(1+8h)).
struct CoeffVector {
  Rat h;
  Rat gamma;
  std::vector<QuadNum> c;  // c[p], index 0 unused

  int pmax() const { return static_cast<int>(c.size()) - 1; }
  const QuadNum& C(int p) const { return c.at(static_cast<size_t>(p)); }
};

/// One-hole coefficients of the gamma = 0 family, from the closed form
/// (1+8h)^{(1-p)/2} * sum_{q<p} binom(2q,q) h^q. The raw closed form gives
/// (1+8h)^{-1/2} at p = 1; since C_1 must be the probability a_0^1 = 1, the
/// formula is renormalized by sqrt(1+8h) so that c_psht(1, h) = 1.
QuadNum c_psht(int p, const Rat& h);

/// C_1..C_P by solving the defining recursion
///   C_{p+1} = C_p - 2 sum_{i=0}^{p-1} Z_{i+1} C_{p-i} - gamma sum_{i=0}^{p-1} C_{i+1} C_{p-i}
/// step by step, exactly.
CoeffVector c_recursive(const Rat& h, const Rat& gamma, int P);

/// Same values from the generating function: for gamma > 0 the quadratic
///   (gamma/x) C(x)^2 + (A(x) - 2 gamma Z_1 ... ) ... solved in closed form
///   C(x) = (sqrt(A^2 B + 4 gamma x) - A sqrt(B)) / (2 gamma),
/// with A = 1 - x/s, B = 1 - 4hx/s, s = sqrt(1+8h); expanded as an exact
/// power series in x. gamma = 0 routes through c_psht.
CoeffVector c_genfun(const Rat& h, const Rat& gamma, int P);

/// Least p <= p_cap with C_p(h, gamma) < 0 (exact signs), or nullopt.
std::optional<int> find_negative_p(const Rat& h, const Rat& gamma, int p_cap);

/// The series sum_{p>=1} C_p(h, gamma) x^p truncated at order P, i.e. the
/// generating function underlying c_genfun, exposed for derivative checks.
PowerSeries<QuadNum> c_series(const Rat& h, const Rat& gamma, int P);

}  // namespace peeltri::coeffs
