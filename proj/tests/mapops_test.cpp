#include <doctest.h>

#include <cstdint>

#include "peeltri/code.hpp"
#include "peeltri/mapops.hpp"

using namespace peeltri::map;

namespace {

// Dual of the complete binary tree: a 3-regular planar tree of faces. Child
// queries stop at an id threshold so deep walks see an unexplored frontier
// instead of overflowing the id arithmetic.
struct Tree3 : FaceSource {
  static constexpr std::int64_t kLim = std::int64_t(1) << 50;
  std::optional<std::pair<std::int64_t, int>> neighbor(std::int64_t f, int s) override {
    if (f == 0) return {{s + 1, 0}};
    if (s == 1) {
      if (3 * f + 1 > kLim) return std::nullopt;
      return {{3 * f + 1, 0}};
    }
    if (s == 2) {
      if (3 * f + 2 > kLim) return std::nullopt;
      return {{3 * f + 2, 0}};
    }
    if (f <= 3) return {{0, static_cast<int>(f) - 1}};
    return {{f % 3 == 1 ? (f - 1) / 3 : (f - 2) / 3, f % 3 == 1 ? 1 : 2}};
  }
};

TriComplex tetra() {
  return TriComplex::build(4, {{0, 3}, {1, 6}, {2, 9}, {5, 7}, {8, 10}, {11, 4}}, {0, 0, true});
}

}  // namespace

TEST_CASE("dual balls of the tree source") {
  Tree3 tree;
  for (int r = 0; r <= 4; ++r) {
    TriComplex b = dual_ball(tree, r);
    int faces = r == 0 ? 1 : 3 * (1 << r) - 2;
    CHECK(b.face_count() == faces);
    CHECK(b.vertex_count() == faces + 2);  // tree: all boundary vertices distinct
    CHECK(b.hole_count() == 1);
    CHECK(b.truncated());
  }
}

TEST_CASE("balls of the tetrahedron") {
  TriComplex t = tetra();
  CHECK(t.vertex_count() == 4);
  CHECK(t.edge_count() == 6);
  CHECK(primal_ball(t, 1).face_count() == 3);
  CHECK(dual_ball(t, 1).complex.face_count() == 4);
  CHECK(dual_ball(t, 1).determined);
  TriComplex pillow = TriComplex::build(2, {{0, 3}, {1, 5}, {2, 4}}, {0, 0, true});
  CHECK(dual_ball(pillow, 1).complex.face_count() == 2);
}

TEST_CASE("inclusion fixtures") {
  TriComplex t = tetra();
  TriComplex tri = TriComplex::build(1, {}, {0, 0, true});
  TriComplex star = TriComplex::build(1, {}, {0, 0, true}, {{0}, {1}, {2}});
  CHECK(includes(tri, t) == Inclusion::Yes);
  CHECK(includes(star, t) == Inclusion::No);  // needs a loop at the root
  CHECK(includes(t, t) == Inclusion::Yes);
  TriComplex patch2 = TriComplex::build(2, {{0, 3}}, {0, 0, true});
  CHECK(includes(patch2, t) == Inclusion::Yes);
  TriComplex pillow = TriComplex::build(2, {{0, 3}, {1, 5}, {2, 4}}, {0, 0, true});
  // the pillow identifies the patch boundary in a way the patch forbids
  CHECK(includes(patch2, pillow) == Inclusion::No);
}

TEST_CASE("occurrence counts") {
  TriComplex t = tetra();
  CHECK(occ_count(TriComplex::single_vertex(), t) == 12);
  CHECK(occ_count(TriComplex::single_edge(), t) == 12);
  CHECK(occ_count(TriComplex::vertex_loop(), t) == 0);
  CHECK(occ_count(TriComplex::build(1, {}, {0, 0, true}), t) == 12);
  TriComplex pillow = TriComplex::build(2, {{0, 3}, {1, 5}, {2, 4}}, {0, 0, true});
  CHECK(occ_count(TriComplex::single_edge(), pillow) == 6);
  CHECK(occ_count(TriComplex::vertex_loop(), pillow) == 0);
  // sphere made of two 1-gons glued along a loop: the loop contributes two
  // oriented loop edges, the other two edges four plain ones
  TriComplex loops = TriComplex::build(2, {{1, 2}, {4, 5}, {0, 3}}, {0, 0, true});
  CHECK(occ_count(TriComplex::vertex_loop(), loops) == 2);
  CHECK(occ_count(TriComplex::single_edge(), loops) == 4);
}

TEST_CASE("submap extraction keeps boundary identifications") {
  // one face of the pillow: clean 3-cycle boundary, all vertices distinct
  TriComplex pillow = TriComplex::build(2, {{0, 3}, {1, 5}, {2, 4}}, {0, 0, true});
  Extraction e1 = extract_submap(pillow, {1, 0});
  CHECK(e1.determined);
  CHECK(e1.complex.hole_count() == 1);
  CHECK(e1.complex.perimeters() == std::vector<int>{3});
  CHECK(e1.complex.vertex_count() == 3);
  // pinched host: face 1 hangs on two sides of face 0, identifying two of
  // face 0's corners; the extracted single face must carry that pinch.
  TriComplex pinched = TriComplex::build(2, {{0, 3}, {1, 4}}, {0, 0, true}, {{2}, {5}});
  Extraction e2 = extract_submap(pinched, {1, 0});
  CHECK(e2.determined);
  CHECK(e2.complex.vertex_count() == 2);
  CHECK(e2.complex.hole_count() == 2);
}
