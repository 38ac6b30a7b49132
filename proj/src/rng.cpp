#include "peeltri/rng.hpp"

namespace peeltri::rng {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Engine::Engine(Seed s)
    : eng_(splitmix64(splitmix64(s.seed) ^ splitmix64(s.stream + 0x6a09e667f3bcc909ULL))) {}

bool LazyUniform::less_than(const QuadNum& t) {
  QuadNum lo = QuadNum::rational(lo_, t.h());
  if (lo >= t) return false;
  for (int words = 0; words < 64; ++words) {
    QuadNum hi = QuadNum::rational(lo_ + width_, t.h());
    if (hi <= t) return true;
    width_ /= Rat(Int(1) << 62) * 4;
    lo_ += width_ * Rat(Int(e_->next64()));
    lo = QuadNum::rational(lo_, t.h());
    if (lo >= t) return false;
  }
  // Probability ~2^-4096 of ever getting here for any fixed threshold.
  throw std::runtime_error("LazyUniform: comparison did not resolve");
}

}  // namespace peeltri::rng
