#include <doctest.h>

#include "peeltri/mixture.hpp"

using namespace peeltri;
using namespace peeltri::mixture;

TEST_CASE("point-mass and star coefficients") {
  Mixture star = {{true, 0, 0, 1}};
  CHECK(a_coeff(star, 0, {1, 1}) == SurdSum(Rat(1)));
  CHECK(a_coeff(star, 0, {2}).is_zero());
  CHECK(a_coeff(star, 1, {1}).is_zero());
  Mixture zero = {{false, 0, 0, 1}};
  CHECK(a_coeff(zero, 1, {3}).is_zero());   // lambda = 0 kills positive volume
  CHECK(a_coeff(zero, 0, {5}) == SurdSum(Rat(1)));  // C_p(0,0) = 1
  // every mixture has a_0^1 = 1
  Mixture two = {{false, Rat(1, 8), Rat(1, 3), Rat(1, 4)}, {true, 0, 0, Rat(3, 4)}};
  CHECK(a_coeff(two, 0, {1}) == SurdSum(Rat(1)));
  CHECK_THROWS_AS(validate(Mixture{{false, 0, 0, Rat(1, 2)}}), OutOfRange);
}

TEST_CASE("inclusion probabilities") {
  Mixture mx = {{false, Rat(1, 8), Rat(1, 3), 1}};
  // with a single hole the subset sum degenerates to the a-coefficient
  CHECK((b_from_a(mx, 2, {3}) - a_coeff(mx, 2, {3})).is_zero());
  // the (0, 1) point mass reproduces the star indicator
  Mixture g1 = {{false, 0, 1, 1}};
  CHECK(b_from_a(g1, 0, {1, 1}) == SurdSum(Rat(1)));
  CHECK(b_from_a(g1, 0, {2}).is_zero());
}

TEST_CASE("peeling identity residuals vanish") {
  std::vector<std::pair<Rat, Rat>> pts = {{0, 0}, {Rat(1, 4), 0}, {Rat(1, 8), Rat(1, 3)}};
  for (auto& [h, g] : pts) {
    Mixture m = {{false, h, g, 1}};
    for (int v = 0; v <= 2; ++v) {
      CHECK(verify_peeling_identity(m, v, {2, 1}).is_zero());
      CHECK(verify_peeling_identity(m, v, {1, 3}).is_zero());
      CHECK(verify_peeling_identity(m, v, {4}).is_zero());
    }
  }
  Mixture two = {{false, Rat(1, 8), 0, Rat(1, 2)}, {true, 0, 1, Rat(1, 2)}};
  CHECK(verify_peeling_identity(two, 0, {3, 2}).is_zero());
  CHECK(verify_peeling_identity(two, 1, {1, 1, 2}).is_zero());
}

TEST_CASE("finite differences") {
  Mixture two = {{false, Rat(1, 8), 0, Rat(1, 2)}, {true, 0, 1, Rat(1, 2)}};
  CoeffTable t = ones_table(two, 8, 8);
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; m + n <= 6; ++n) CHECK(all_nonnegative(delta_ops(t, m, n)));
  // the difference operators commute
  CoeffTable ab = delta_ops(delta_ops(t, 2, 0), 0, 3);
  CoeffTable ba = delta_ops(delta_ops(t, 0, 3), 2, 0);
  for (int v = 0; v <= ab.vmax; ++v)
    for (int k = 1; k <= ab.kmax; ++k) CHECK(ab.at(v, k) == ba.at(v, k));
  CHECK_THROWS_AS(delta_ops(t, 9, 0), InsufficientTable);
  // arithmetic counterexample: 1 - 2*(9/10) + 1/2 = -3/10
  CoeffTable bad;
  bad.vmax = 2;
  bad.kmax = 1;
  bad.a = {{SurdSum(Rat(1))}, {SurdSum(Rat(9, 10))}, {SurdSum(Rat(1, 2))}};
  CHECK(!all_nonnegative(delta_ops(bad, 2, 0)));
}

TEST_CASE("reconstruction from the ones table") {
  // target (1,...,1) is the table entry itself
  Mixture pm = {{false, 0, Rat(1, 2), 1}};
  CoeffTable tab = ones_table(pm, 40, 6);
  Reconstructed r1 = reconstruct_from_ones(tab, {1, 1}, 0, 30, Rat(1, 2));
  CHECK((r1.value - tab.at(0, 2)).is_zero());
  // at lambda = 0 all tails vanish: target (2) equals C_2 = 1/2 exactly
  Reconstructed r2 = reconstruct_from_ones(tab, {2}, 0, 30, Rat(1, 2));
  CHECK(r2.value == SurdSum(Rat(1, 2)));
  // h > 0: matches a_coeff within the certified bound
  Mixture pm2 = {{false, Rat(1, 8), 0, 1}};
  CoeffTable tab2 = ones_table(pm2, 80, 6);
  Reconstructed r3 = reconstruct_from_ones(tab2, {3}, 0, 30, Rat(1, 10));
  SurdSum diff = r3.value - a_coeff(pm2, 0, {3});
  if (diff.sign() < 0) diff = -diff;
  CHECK(diff <= SurdSum(QuadNum(r3.error_bound)));
  CHECK_THROWS_AS(reconstruct_from_ones(tab2, {3}, 0, 1, Rat(1, 1000000)), TailBoundTooLarge);
}
