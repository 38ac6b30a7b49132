#pragma once

#include <cstdint>
#include <random>

#include "peeltri/quadnum.hpp"

namespace peeltri::rng {

/// Reproducibility handle: identical (seed, stream) gives identical draws
/// bit-for-bit on every platform (mt19937_64 output is fixed by the standard).
struct Seed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

class Engine {
 public:
  explicit Engine(Seed s);
  std::uint64_t next64() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

/// One uniform variate on [0,1) consumed as a lazily extended dyadic rational,
/// so comparisons against exact algebraic thresholds are themselves exact.
class LazyUniform {
 public:
  explicit LazyUniform(Engine& e) : e_(&e) {}

  /// Exact truth value of U < t for t in [0, 1]. Draws more bits only while
  /// the dyadic enclosure of U straddles t.
  bool less_than(const QuadNum& t);

 private:
  Engine* e_;
  Rat lo_ = 0;
  Rat width_ = 1;
};

}  // namespace peeltri::rng
