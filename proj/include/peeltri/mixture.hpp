#pragma once

#include <vector>

#include "peeltri/coeffs.hpp"
#include "peeltri/surd.hpp"

namespace peeltri::mixture {

using peeltri::Rat;

struct InsufficientTable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TailBoundTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One point mass of the classifying pair: either a parameter point (h, gamma)
/// or the degenerate symbol (star = true), with a weight. Atoms from different
/// h live in different quadratic fields, so mixture values are SurdSums.
struct MixtureAtom {
  bool star = false;
  Rat h = 0;
  Rat gamma = 0;
  Rat weight = 1;
};
using Mixture = std::vector<MixtureAtom>;

/// Throws OutOfRange unless parameters are in range and weights sum to 1.
void validate(const Mixture& m);

/// Markov coefficient a_v^{p_1,...,p_k}: weighted sum over atoms of
/// lambda^v gamma^{k-1} prod_i C_{p_i}(lambda, gamma); the star atom
/// contributes 1 exactly when v = 0 and every p_i = 1.
SurdSum a_coeff(const Mixture& m, int v, const std::vector<int>& perims);

/// Inclusion probability b_v^{p_1,...,p_k}: per atom, the sum over nonempty
/// subsets I of the holes left open,
///   lambda^v sum_I gamma^{|I|-1} prod_{i not in I} Z_{p_i} prod_{i in I} C_{p_i},
/// the volume sums over the filled holes resummed exactly through Z.
SurdSum b_from_a(const Mixture& m, int v, const std::vector<int>& perims);

/// Exact residual of the peeling equation at the first perimeter:
///   a_v^{p1,..} - a_v^{p1+1,..} - 2 sum_{i<p1} Z_{i+1} a_v^{p1-i,..}
///                               - sum_{i<p1} a_v^{i+1,p1-i,..},
/// the swallowed-volume sums resummed through Z. Zero for every mixture.
SurdSum verify_peeling_identity(const Mixture& m, int v, const std::vector<int>& perims);

/// Rectangle of coefficients a_v^{k x 1} (k holes of perimeter 1), the data
/// that determines a Markovian law: a[v][k-1] for v = 0..vmax, k = 1..kmax.
struct CoeffTable {
  int vmax = 0;
  int kmax = 0;
  std::vector<std::vector<SurdSum>> a;

  const SurdSum& at(int v, int k) const;
};
CoeffTable ones_table(const Mixture& m, int vmax, int kmax);

/// Applies the finite differences Delta_v^m Delta_k^n (forward differences
/// a_v - a_{v+1} and a^k - a^{k+1}); the result rectangle shrinks by (m, n).
/// Throws InsufficientTable when the input is too small.
CoeffTable delta_ops(const CoeffTable& t, int m, int n);

/// Exact verdict: every entry >= 0.
bool all_nonnegative(const CoeffTable& t);

struct Reconstructed {
  SurdSum value;
  /// Certified bound on |value - a_v^{p_1,...,p_k}|, from truncating each
  /// swallowed-volume sum at J terms: the tail of sum_j tau_j(q) a_{v+j} is at
  /// most Z_q(lambda_c) - sum_{j<=J} tau_j(q) lambda_c^j since a_{v+j} <=
  /// lambda_c^j a_v <= lambda_c^j for every Markovian law.
  QuadNum error_bound;  // lives in the h = 1/4 field
};

/// Computes a_v^{p_1,...,p_k} from the table of a_v^{k x 1} alone by running
/// the peeling equation backwards, truncating volume sums at J. Throws
/// TailBoundTooLarge if the certified bound exceeds `tolerance`, and
/// InsufficientTable if the table rectangle is too small for (perims, v, J).
Reconstructed reconstruct_from_ones(const CoeffTable& ones, const std::vector<int>& perims, int v,
                                    int J, const Rat& tolerance);

}  // namespace peeltri::mixture
