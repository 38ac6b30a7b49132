#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "peeltri/rational.hpp"
#include "peeltri/rng.hpp"
#include "peeltri/tricomplex.hpp"

namespace peeltri::sampler {

using peeltri::Rat;

struct CapExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UndecidableRadius : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Which active edge each peeling step reveals: the side whose inner face is
/// closest to the root in the current dual graph, or the side that has been on
/// the frontier longest. The law of the final ball does not depend on this
/// choice; exposing two policies lets tests check that.
enum class PeelPolicy { BfsOrder, Fifo };

struct SampleStats {
  long fill_retries = 0;    // Boltzmann fills restarted after hitting the cap
  long truncated_runs = 0;  // samples abandoned entirely (cap hit on every retry)
  long peel_steps = 0;
};

/// Boltzmann-distributed triangulation of the p-gon: probability of each disk
/// proportional to lambda^volume, normalized by Z_p. Requires h > 0 (at h = 0
/// every disk has probability zero). The result has one hole of perimeter p,
/// rooted on a boundary side; for p = 2 it may be the single-edge value (the
/// two boundary sides glued to each other, the volume-1 disk with no faces).
/// Builds larger than `face_cap` faces are restarted, at most `retries` times;
/// then CapExhausted is thrown, so a cap never silently biases the law.
map::TriComplex sample_boltzmann_polygon(int p, const Rat& h, rng::Seed seed,
                                         long face_cap = 1000000, int retries = 10,
                                         SampleStats* stats = nullptr);

/// Ball of radius r in the dual graph around the root face of the Markovian
/// triangulation with parameters (h, gamma = 0), grown by edge peeling: from
/// an explored region with one active hole of perimeter q, the next face is
/// new-vertex with probability C_{q+1}/C_q, or swallows i of the adjacent hole
/// edges to its left or right with probability Z_{i+1} C_{q-i}/C_q each, the
/// swallowed (i+1)-gon filled by a Boltzmann disk. Peeling continues until the
/// ball and its boundary identifications are fully determined; the result is
/// marked truncated (its free sides are cut edges, not holes of the law).
map::TriComplex sample_dual_ball(const Rat& h, int r, rng::Seed seed,
                                 PeelPolicy policy = PeelPolicy::BfsOrder,
                                 long face_cap = 1000000, int retries = 10,
                                 SampleStats* stats = nullptr);

/// Dual ball of radius r of the h = 0 triangulation, whose dual is the
/// complete binary tree: 3*2^r - 2 faces, all vertices distinct.
map::TriComplex build_T0_dual_ball(int r);

/// Dual ball of radius r of the degenerate one-vertex triangulation: same
/// gluings as the h = 0 ball, but every free side is a loop at the single
/// vertex (each its own hole cycle).
map::TriComplex build_Tstar_dual_ball(int r);

/// Snapshot of an exploration after a fixed number of peeling steps, with the
/// incrementally tracked frontier length and volume, so consistency with the
/// values recomputed from the complex can be tested.
struct ExplorationTrace {
  map::TriComplex region;
  long perimeter = 0;
  long volume = 0;
};
ExplorationTrace explore_steps(const Rat& h, int steps, rng::Seed seed,
                               PeelPolicy policy = PeelPolicy::BfsOrder);

struct InclusionEstimate {
  long yes = 0;
  long samples = 0;
  double p_hat = 0;
  double stderr_ = 0;  // binomial standard error
};

/// Monte Carlo estimate of P(t included) under the (h, 0) law, from `samples`
/// independent balls of radius max dual depth of t. Throws UndecidableRadius
/// if any trial comes back undetermined at that radius.
InclusionEstimate empirical_inclusion_prob(const map::TriComplex& t, const Rat& h, long samples,
                                           rng::Seed seed);

}  // namespace peeltri::sampler
