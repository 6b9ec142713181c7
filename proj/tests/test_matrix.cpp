#include <doctest.h>

#include <random>

#include "k3lat/matrix.hpp"

using namespace k3lat;

namespace {

// Random unimodular matrix as a product of elementary row additions with
// coefficients bounded by 5.
Mat random_unimodular(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> idx(0, n - 1), coef(-5, 5);
  Mat u = Mat::identity(n);
  for (int step = 0; step < 3 * n; ++step) {
    int i = idx(rng), j = idx(rng);
    if (i == j) continue;
    Int c = coef(rng);
    Mat e = Mat::identity(n);
    e.at(i, j) = c;
    u = u * e;
  }
  return u;
}

std::vector<Int> diag_of(const Mat& m) {
  std::vector<Int> d;
  for (int i = 0; i < std::min(m.rows(), m.cols()); ++i) d.push_back(m.at(i, i));
  return d;
}

}  // namespace

TEST_CASE("determinant basics") {
  CHECK(Mat{{0, 1}, {1, 0}}.det() == -1);
  CHECK(Mat{{4, 6}, {6, 4}}.det() == -20);
  CHECK(Mat::identity(5).det() == 1);
  CHECK(Mat{{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}.det() == 30);
  // singular
  CHECK(Mat{{1, 2}, {2, 4}}.det() == 0);
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-6, 6);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + int(rng() % 3);
    Mat a(n, n), b(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        a.at(i, j) = entry(rng);
        b.at(i, j) = entry(rng);
      }
    CHECK((a * b).det() == a.det() * b.det());
  }
}

TEST_CASE("smith normal form: decomposition and divisibility chain") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + int(rng() % 4);
    Mat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a.at(i, j) = entry(rng);
    SmithResult s = smith_normal_form(a);
    CHECK(s.u.det() * s.u.det() == 1);
    CHECK(s.v.det() * s.v.det() == 1);
    CHECK(s.s == s.u * a * s.v);
    std::vector<Int> d = diag_of(s.s);
    for (size_t i = 0; i + 1 < d.size(); ++i) {
      CHECK(d[i] >= 0);
      if (d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
      else CHECK(d[i + 1] == 0);
    }
  }
}

TEST_CASE("smith normal form of diag(8,-2,-2) is (2,2,8)") {
  Mat a{{8, 0, 0}, {0, -2, 0}, {0, 0, -2}};
  SmithResult s = smith_normal_form(a);
  CHECK(diag_of(s.s) == std::vector<Int>{2, 2, 8});
}

TEST_CASE("smith diagonal invariant under unimodular pre/post multiplication") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (int trial = 0; trial < 15; ++trial) {
    int n = 2 + int(rng() % 3);
    Mat a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a.at(i, j) = entry(rng);
    Mat p = random_unimodular(n, rng), q = random_unimodular(n, rng);
    CHECK(diag_of(smith_normal_form(a).s) == diag_of(smith_normal_form(p * a * q).s));
  }
}

TEST_CASE("integer kernel") {
  // rank-1 matrix, kernel of rank 2
  Mat a{{1, 2, 3}, {2, 4, 6}, {3, 6, 9}};
  std::vector<std::vector<Int>> ker = integer_kernel(a);
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) {
    Int r0 = v[0] + 2 * v[1] + 3 * v[2];
    CHECK(r0 == 0);
  }
  // nonsingular matrix has trivial kernel
  CHECK(integer_kernel(Mat{{2, 1}, {1, 1}}).empty());
}
