#include <doctest.h>

#include <random>

#include "k3lat/isometry.hpp"

using namespace k3lat;

namespace {

struct BasisChange {
  Mat u, uinv;
};

// Product of elementary transvections with tracked inverse.
BasisChange random_change(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> idx(0, n - 1), coef(-2, 2);
  BasisChange bc{Mat::identity(n), Mat::identity(n)};
  for (int step = 0; step < 2 * n; ++step) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    Int c = coef(rng);
    Mat e = Mat::identity(n), einv = Mat::identity(n);
    e.at(i, j) = c;
    einv.at(i, j) = -c;
    bc.u = bc.u * e;
    bc.uinv = einv * bc.uinv;
  }
  return bc;
}

Vec column(const Mat& m, int j) {
  Vec v(size_t(m.rows()));
  for (int i = 0; i < m.rows(); ++i) v[size_t(i)] = m.at(i, j);
  return v;
}

}  // namespace

TEST_CASE("reflection in H - delta on diag(4,-2)") {
  Lattice l = make_lattice(Mat{{4, 0}, {0, -2}});
  Isometry r = reflection_fix(l, {1, -1});
  // H -> 3H - 4delta, delta -> 2H - 3delta
  CHECK(r.matrix == Mat{{3, 2}, {-4, -3}});
  CHECK(is_involution(r));
  // D itself is fixed; vectors orthogonal to D are negated
  Vec d{1, -1};
  CHECK(r.matrix * d == d);
  Vec perp{1, -2};  // <perp, D> = 4*1 + (-2)*(-2)*(-1) = 0
  REQUIRE(pairing(l, perp, d) == 0);
  CHECK(r.matrix * perp == Vec{-1, 2});
  CHECK_THROWS_AS(reflection_fix(l, {1, 0}), NotSquareTwo);  // q = 4
}

TEST_CASE("reflection_neg requires square -2") {
  Lattice l = make_lattice(Mat{{4, 0}, {0, -2}});
  Isometry r = reflection_neg(l, {0, 1});
  CHECK(is_involution(r));
  CHECK(r.matrix * Vec{0, 1} == Vec{0, -1});
  CHECK(r.matrix * Vec{1, 0} == Vec{1, 0});
  CHECK_THROWS_AS(reflection_neg(l, {1, -1}), NotSquareTwo);  // q = 2
}

TEST_CASE("reflections in random square-2 classes are involutions") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> dia(1, 5);
  int tested = 0;
  while (tested < 200) {
    int n = 2 + int(rng() % 3);
    Mat g0(n, n);
    g0.at(0, 0) = 2;  // guaranteed square-2 basis vector
    for (int i = 1; i < n; ++i) g0.at(i, i) = 2 * dia(rng) * ((rng() % 2) ? 1 : -1);
    BasisChange bc = random_change(n, rng);
    Mat g = bc.u.transposed() * g0 * bc.u;
    Lattice l = make_lattice(g);
    Vec d = column(bc.uinv, 0);
    REQUIRE(square(l, d) == 2);
    Isometry r = reflection_fix(l, d);
    CHECK(is_involution(r));
    std::vector<Vec> inv = invariant_sublattice(r);
    REQUIRE(inv.size() == 1);
    // D is a primitive multiple of the generator: generator = +-D / gcd(D)
    Int gc = 0;
    for (const Int& x : d) gc = gcd(gc, x);
    Vec dn = d;
    for (Int& x : dn) x /= gc;
    Vec mdn = dn;
    for (Int& x : mdn) x = -x;
    CHECK((inv[0] == dn || inv[0] == mdn));
    ++tested;
  }
}

TEST_CASE("compose: involutivity, associativity, ambient checks") {
  Lattice l = make_lattice(Mat{{4, 6, 0}, {6, 4, 0}, {0, 0, -2}});
  Isometry s1 = reflection_fix(l, {1, 0, -1});
  Isometry s2 = reflection_fix(l, {0, 1, -1});
  CHECK(compose(s1, s1).matrix == Mat::identity(3));

  Isometry k = compose(compose(s1, s2), s1);
  CHECK(k.matrix == compose(s1, compose(s2, s1)).matrix);
  CHECK(is_involution(k));
  std::vector<Vec> inv = invariant_sublattice(k);
  REQUIRE(inv.size() == 1);
  CHECK((inv[0] == Vec{4, -1, -3} || inv[0] == Vec{-4, 1, 3}));

  Lattice other = make_lattice(Mat{{2, 0}, {0, -2}});
  Isometry id2 = identity_isometry(other);
  CHECK_THROWS_AS(compose(s1, id2), AmbientMismatch);
}

TEST_CASE("isometry construction validates the Gram invariant") {
  Lattice u = standard(StandardLattice::U);
  // swap e <-> f preserves the form
  Isometry swp = make_isometry(u, Mat{{0, 1}, {1, 0}});
  CHECK(is_involution(swp));
  CHECK_THROWS_AS(make_isometry(u, Mat{{1, 1}, {0, 1}}), ContractViolation);
}

TEST_CASE("orientation on the positive 3-space of the rank-23 lattice") {
  Lattice big = standard(StandardLattice::K3_SQ);
  auto unitpair = [&](int a, int b) {
    Vec v(23, 0);
    v[size_t(a)] = 1;
    v[size_t(b)] = 1;
    return v;
  };
  std::array<Vec, 3> pos{unitpair(0, 1), unitpair(2, 3), unitpair(4, 5)};

  CHECK(orientation_positive(identity_isometry(big), pos) == 1);

  Mat minus = Mat::identity(23);
  for (int i = 0; i < 23; ++i) minus.at(i, i) = -1;
  CHECK(orientation_positive(make_isometry(big, minus), pos) == -1);

  Isometry r = reflection_fix(big, unitpair(0, 1));  // V contains D
  CHECK(orientation_positive(r, pos) == 1);

  // V must be positive definite
  std::array<Vec, 3> bad{unitpair(0, 1), unitpair(2, 3), Vec(23, 0)};
  bad[2][22] = 1;  // square -2
  CHECK_THROWS_AS(orientation_positive(identity_isometry(big), bad), ContractViolation);
}
