#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "peeltri/rational.hpp"
#include "peeltri/tricomplex.hpp"

namespace peeltri::enumerator {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two independent exhaustive generators; they must produce identical sets.
/// GluingSearch pairs up triangle sides depth-first, cutting branches whose
/// partial surface already has positive genus. PeelingCodes enumerates the
/// decision sequences of a deterministic peeling exploration, which doubles
/// as an audit of the sampler's step bookkeeping.
enum class Strategy { GluingSearch, PeelingCodes };

/// Summary of one generation: the number of rooted sphere triangulations with
/// 2n faces and an order-independent digest of their canonical-code set.
struct GenerationRun {
  int n = 0;
  Strategy strategy = Strategy::PeelingCodes;
  long count = 0;
  std::string digest;
};

/// Calls visit once per rooted sphere triangulation with 2n faces (type I:
/// loops and multiple edges allowed; the root is an oriented edge). Every
/// rooted isomorphism class appears exactly once. Throws BudgetExceeded when
/// n is outside [1, max_n].
void enumerate_sphere(int n, Strategy strategy,
                      const std::function<void(const map::TriComplex&)>& visit, int max_n = 6);

GenerationRun generation_run(int n, Strategy strategy, int max_n = 6);

/// Number of triangulations of the p-gon with volume n (n + 1 vertices in
/// total, root face simple of degree p), counted by exhaustive enumeration of
/// peeling decision sequences; includes the degenerate volume-1 filling of
/// the 2-gon. Fully independent of the generating-function route.
long tau_bruteforce(int n, int p);

/// Exact histogram {occurrence count -> number of maps} of the rooted
/// occurrence count of pattern over all rooted sphere triangulations with 2n
/// faces.
std::map<int, long> occ_distribution(const map::TriComplex& pattern, int n, int max_n = 6);

/// E[occ]/6n over the uniform rooted law; by rerooting invariance this is the
/// probability that the pattern occurs at the root of a uniform rooted map.
Rat mean_occ_ratio(const map::TriComplex& pattern, int n, int max_n = 6);

/// E[1/deg(root vertex)] over the uniform rooted law; equals (n+2)/(6n): the
/// oriented edges of one map partition by origin vertex, so the per-map sum
/// of 1/deg over roots is the vertex count n+2.
Rat mean_inverse_degree(int n, int max_n = 6);

}  // namespace peeltri::enumerator
