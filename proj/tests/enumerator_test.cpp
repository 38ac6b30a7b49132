#include <doctest.h>

#include "peeltri/enumerator.hpp"
#include "peeltri/mapops.hpp"
#include "peeltri/series.hpp"

using namespace peeltri;
using namespace peeltri::enumerator;
using map::TriComplex;

TEST_CASE("brute-force disk counts match the generating function") {
  for (int p = 1; p <= 3; ++p)
    for (int n = 1; n <= 4; ++n) CHECK(Int(tau_bruteforce(n, p)) == series::tau(n, p));
  CHECK(tau_bruteforce(1, 2) == 1);  // the degenerate 2-gon closure
  CHECK(tau_bruteforce(1, 3) == 0);
  CHECK(tau_bruteforce(0, 2) == 0);
}

TEST_CASE("sphere counts match the root-edge decomposition") {
  // cutting the root edge: tau_{n+1}(2) non-loop maps plus ordered pairs of
  // 1-gon disks for loop roots
  for (int n = 1; n <= 5; ++n) {
    GenerationRun g = generation_run(n, Strategy::PeelingCodes);
    Int expect = series::tau(n + 1, 2);
    for (int a = 1; a <= n; ++a) expect += series::tau(a, 1) * series::tau(n + 1 - a, 1);
    CHECK(Int(g.count) == expect);
  }
}

TEST_CASE("both strategies generate the same set") {
  for (int n = 1; n <= 4; ++n) {
    GenerationRun a = generation_run(n, Strategy::GluingSearch);
    GenerationRun b = generation_run(n, Strategy::PeelingCodes);
    CHECK(a.count == b.count);
    CHECK(a.digest == b.digest);
  }
}

TEST_CASE("every generated map is a rooted sphere triangulation") {
  TriComplex t10 = TriComplex::single_vertex();
  TriComplex t20 = TriComplex::single_edge();
  TriComplex t110 = TriComplex::vertex_loop();
  for (int n = 1; n <= 3; ++n) {
    enumerate_sphere(n, Strategy::PeelingCodes, [&](const TriComplex& h) {
      CHECK(h.vertex_count() == n + 2);
      CHECK(h.edge_count() == 3 * n);
      CHECK(h.hole_count() == 0);
      CHECK(map::occ_count(t10, h) == 6 * n);
      CHECK(map::occ_count(t20, h) + map::occ_count(t110, h) == 6 * n);
      // oriented edges partition by origin: sum over roots of 1/deg = V
      Rat s = 0;
      for (map::SideId sd = 0; sd < 3 * h.face_count(); ++sd)
        for (bool fwd : {false, true}) {
          TriComplex r = h.rerooted({map::face_of(sd), map::index_of(sd), fwd});
          s += Rat(1, r.degree(r.root_origin_vertex()));
        }
      s /= 2;  // each edge was visited from both of its glued sides
      CHECK(s == Rat(n + 2));
    });
  }
}

TEST_CASE("mean inverse degree follows Euler's formula") {
  for (int n = 1; n <= 5; ++n) {
    Rat want(n + 2, 6 * n);
    want.canonicalize();
    CHECK(mean_inverse_degree(n) == want);
  }
}

TEST_CASE("occurrence histograms") {
  TriComplex tri = TriComplex::build(1, {}, {0, 0, true});
  std::map<int, long> h2 = occ_distribution(tri, 2);
  long total = 0, maps = 0;
  for (auto [k, c] : h2) {
    total += k * c;
    maps += c;
  }
  CHECK(maps == 32);
  Rat ratio(total, 32 * 12);
  ratio.canonicalize();
  CHECK(ratio == Rat(5, 16));
  CHECK(mean_occ_ratio(tri, 2) == Rat(5, 16));
  // the ratio climbs toward the infinite-volume value 5/8 = C_3 at h = 1/4
  Rat prev = 0;
  for (int n = 2; n <= 5; ++n) {
    Rat r = mean_occ_ratio(tri, n);
    CHECK(r > prev);
    CHECK(r < Rat(5, 8));
    prev = r;
  }
}

TEST_CASE("budget ceiling") {
  CHECK_THROWS_AS(enumerate_sphere(7, Strategy::PeelingCodes, [](const TriComplex&) {}),
                  BudgetExceeded);
  CHECK_THROWS_AS(generation_run(0, Strategy::PeelingCodes), BudgetExceeded);
  // the ceiling is configurable
  long count = 0;
  CHECK_NOTHROW(enumerate_sphere(1, Strategy::PeelingCodes,
                                 [&](const TriComplex&) { ++count; }, 1));
  CHECK(count == 4);
}
