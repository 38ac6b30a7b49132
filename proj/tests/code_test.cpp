#include <doctest.h>

#include "peeltri/code.hpp"

using namespace peeltri::map;

namespace {
void roundtrip(const TriComplex& t) {
  std::string c = canonical_code(t);
  CHECK(canonical_code(decode_code(c)) == c);
}
}  // namespace

TEST_CASE("codes round-trip through decoding") {
  roundtrip(TriComplex::build(1, {}, {0, 0, true}));
  roundtrip(TriComplex::build(1, {}, {0, 0, true}, {{0}, {1}, {2}}));
  roundtrip(TriComplex::build(2, {{0, 3}, {1, 5}, {2, 4}}, {0, 0, true}));
  roundtrip(TriComplex::build(2, {{1, 2}, {0, 3}}, {0, 0, true}));
  roundtrip(TriComplex::single_vertex());
  roundtrip(TriComplex::single_edge());
  roundtrip(TriComplex::vertex_loop());
  roundtrip(TriComplex::build(1, {}, {0, 0, false}));  // reversed root
}

TEST_CASE("codes are root-placement sensitive but symmetry blind") {
  TriComplex pillow = TriComplex::build(2, {{0, 3}, {1, 5}, {2, 4}}, {0, 0, true});
  // the pillow looks the same from each of its 6 sides
  for (int f = 0; f < 2; ++f)
    for (int s = 0; s < 3; ++s)
      CHECK(canonical_code(pillow.rerooted({f, s, true})) == canonical_code(pillow));
  TriComplex folded = TriComplex::build(2, {{1, 2}, {0, 3}}, {0, 0, true});
  CHECK(canonical_code(folded) != canonical_code(pillow));
  // reversing the root changes the code
  CHECK(canonical_code(pillow.rerooted({0, 0, false})) != canonical_code(pillow));
}

TEST_CASE("hole structure enters the code") {
  TriComplex tri = TriComplex::build(1, {}, {0, 0, true});
  TriComplex star = TriComplex::build(1, {}, {0, 0, true}, {{0}, {1}, {2}});
  CHECK(canonical_code(tri) != canonical_code(star));
}

TEST_CASE("sentinel codes are distinct") {
  std::string a = canonical_code(TriComplex::single_vertex());
  std::string b = canonical_code(TriComplex::single_edge());
  std::string c = canonical_code(TriComplex::vertex_loop());
  CHECK(a != b);
  CHECK(b != c);
  CHECK(a != c);
}
