#include <doctest.h>

#include <random>

#include "k3lat/lattice.hpp"

using namespace k3lat;

TEST_CASE("make_lattice basics") {
  Lattice l2 = make_lattice(Mat{{2}});
  CHECK(l2.det == 2);
  CHECK(l2.even);

  Lattice l1 = make_lattice(Mat{{4, 6}, {6, 4}});
  CHECK(l1.det == -20);
  CHECK(l1.even);

  Lattice odd = make_lattice(Mat{{1, 0}, {0, 1}});
  CHECK_FALSE(odd.even);

  CHECK_THROWS_AS(make_lattice(Mat{{1, 2}, {3, 4}}), ContractViolation);  // not symmetric
  CHECK_THROWS_AS(make_lattice(Mat{{1, 2}, {2, 4}}), DegenerateLattice);
}

TEST_CASE("standard lattices") {
  Lattice u = standard(StandardLattice::U);
  CHECK(u.rank == 2);
  CHECK(u.det == -1);
  CHECK(signature(u) == std::pair<int, int>{1, 1});

  Lattice e8m = standard(StandardLattice::E8_MINUS);
  CHECK(e8m.rank == 8);
  CHECK(e8m.det == 1);
  CHECK(signature(e8m) == std::pair<int, int>{0, 8});

  Lattice k3 = standard(StandardLattice::K3);
  CHECK(k3.rank == 22);
  CHECK(signature(k3) == std::pair<int, int>{3, 19});
  CHECK(k3.det == -1);

  Lattice big = standard(StandardLattice::K3_SQ);
  CHECK(big.rank == 23);
  CHECK(big.even);
  CHECK(signature(big) == std::pair<int, int>{3, 20});
  CHECK(big.det == 2);

  Lattice t10 = standard(StandardLattice::TWO_T, 5);
  CHECK(t10.gram.at(0, 0) == 10);
}

TEST_CASE("direct sum: determinants multiply, signatures add") {
  Lattice a = make_lattice(Mat{{6}});
  Lattice b = standard(StandardLattice::MINUS_TWO);
  Lattice s = direct_sum(a, b);
  CHECK(s.gram == Mat{{6, 0}, {0, -2}});
  CHECK(s.det == a.det * b.det);
  auto [p1, n1] = signature(a);
  auto [p2, n2] = signature(b);
  CHECK(signature(s) == std::pair<int, int>{p1 + p2, n1 + n2});
}

TEST_CASE("pairing examples and bilinearity") {
  Lattice l1 = make_lattice(Mat{{4, 6}, {6, 4}});
  CHECK(pairing(l1, {1, 0}, {0, 1}) == 6);

  Lattice q = make_lattice(Mat{{4, 0}, {0, -2}});
  CHECK(square(q, {1, -1}) == 2);  // (H - delta)^2

  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(-8, 8);
  for (int trial = 0; trial < 50; ++trial) {
    Vec v{e(rng), e(rng)}, w{e(rng), e(rng)}, x{e(rng), e(rng)};
    CHECK(pairing(l1, v, w) == pairing(l1, w, v));
    Vec wpx{w[0] + x[0], w[1] + x[1]};
    CHECK(pairing(l1, v, wpx) == pairing(l1, v, w) + pairing(l1, v, x));
  }
  CHECK(pairing(l1, {5, -7}, {0, 0}) == 0);
  CHECK_THROWS_AS(pairing(l1, {1, 0, 0}, {0, 1}), AmbientMismatch);
}

TEST_CASE("discriminant group") {
  Lattice r2 = make_lattice(Mat{{8, 0, 0}, {0, -2, 0}, {0, 0, -2}});
  DiscriminantGroup g = discriminant_group(r2);
  CHECK(g.invariant_factors == std::vector<Int>{2, 2, 8});
  CHECK(g.length() == 3);
  CHECK(g.order() == 32);

  CHECK(discriminant_group(standard(StandardLattice::U)).length() == 0);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> e(-7, 7);
  for (int trial = 0; trial < 20; ++trial) {
    Mat m(2, 2);
    m.at(0, 0) = e(rng); m.at(1, 1) = e(rng);
    m.at(0, 1) = m.at(1, 0) = e(rng);
    if (m.det() == 0) continue;
    Lattice l = make_lattice(m);
    CHECK(discriminant_group(l).order() == abs(l.det));
  }
}

TEST_CASE("primitive vectors") {
  Lattice l = make_lattice(Mat{{4, 6, 0}, {6, 4, 0}, {0, 0, -2}});
  CHECK(is_primitive_vector(l, {4, -1, -3}));
  CHECK_FALSE(is_primitive_vector(l, {2, 0, 0}));
  CHECK(is_primitive_vector(l, {1, 0, -1}));
  CHECK_THROWS_AS(is_primitive_vector(l, {0, 0, 0}), ContractViolation);
}

TEST_CASE("transcendental obstruction and embedding criterion") {
  auto r_k = [](int k) {
    Mat g(k + 1, k + 1);
    g.at(0, 0) = 4 + 2 * k;
    for (int i = 1; i <= k; ++i) g.at(i, i) = -2;
    return make_lattice(g);
  };
  CHECK(transcendental_obstruction(r_k(10)) == Obstruction::Consistent);
  CHECK(transcendental_obstruction(r_k(11)) == Obstruction::Impossible);
  CHECK(transcendental_obstruction(make_lattice(Mat{{2}})) == Obstruction::Consistent);
  CHECK_THROWS_AS(transcendental_obstruction(standard(StandardLattice::MINUS_TWO)),
                  ContractViolation);

  CHECK(morrison_embeddable(make_lattice(Mat{{4, 6}, {6, 4}})));
  CHECK(morrison_embeddable(r_k(9)));
  CHECK_FALSE(morrison_embeddable(r_k(10)));  // rank 11
  CHECK_FALSE(morrison_embeddable(standard(StandardLattice::MINUS_TWO)));
}
