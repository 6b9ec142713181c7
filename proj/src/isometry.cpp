#include "k3lat/isometry.hpp"

namespace k3lat {

Isometry make_isometry(const Lattice& l, const Mat& m) {
  if (m.rows() != l.rank || m.cols() != l.rank)
    throw AmbientMismatch("isometry matrix size does not match lattice rank");
  if (m.transposed() * l.gram * m != l.gram)
    throw ContractViolation("matrix does not preserve the Gram form");
  Int d = m.det();
  if (d != 1 && d != -1) throw ContractViolation("isometry must have determinant +-1");
  return Isometry{m, l};
}

Isometry identity_isometry(const Lattice& l) {
  return Isometry{Mat::identity(l.rank), l};
}

Isometry reflection_fix(const Lattice& l, const Vec& d) {
  Int d2 = square(l, d);
  if (d2 != 2) throw NotSquareTwo("reflection_fix requires a vector of square 2, got " + d2.str());
  int n = l.rank;
  Mat m(n, n);
  for (int j = 0; j < n; ++j) {
    Vec ej(n);
    ej[j] = 1;
    Int c = pairing(l, ej, d);
    for (int i = 0; i < n; ++i) m.at(i, j) = c * d[i] - ej[i];
  }
  return make_isometry(l, m);
}

Isometry reflection_neg(const Lattice& l, const Vec& d) {
  Int d2 = square(l, d);
  if (d2 != -2) throw NotSquareTwo("reflection_neg requires a vector of square -2, got " + d2.str());
  int n = l.rank;
  Mat m(n, n);
  for (int j = 0; j < n; ++j) {
    Vec ej(n);
    ej[j] = 1;
    Int c = pairing(l, ej, d);
    for (int i = 0; i < n; ++i) m.at(i, j) = ej[i] + c * d[i];
  }
  return make_isometry(l, m);
}

Isometry compose(const Isometry& g, const Isometry& h) {
  if (g.ambient.gram != h.ambient.gram)
    throw AmbientMismatch("cannot compose isometries of different lattices");
  return make_isometry(g.ambient, g.matrix * h.matrix);
}

bool is_involution(const Isometry& g) {
  return g.matrix * g.matrix == Mat::identity(g.ambient.rank);
}

std::vector<Vec> invariant_sublattice(const Isometry& g) {
  return integer_kernel(g.matrix - Mat::identity(g.ambient.rank));
}

int orientation_positive(const Isometry& g, const std::array<Vec, 3>& v) {
  const Lattice& l = g.ambient;
  // Gram of the 3-space, must be positive definite (Sylvester minors).
  Rat gv[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) gv[i][j] = Rat(pairing(l, v[i], v[j]));
  Rat m1 = gv[0][0];
  Rat m2 = gv[0][0] * gv[1][1] - gv[0][1] * gv[1][0];
  Rat m3 = gv[0][0] * (gv[1][1] * gv[2][2] - gv[1][2] * gv[2][1]) -
           gv[0][1] * (gv[1][0] * gv[2][2] - gv[1][2] * gv[2][0]) +
           gv[0][2] * (gv[1][0] * gv[2][1] - gv[1][1] * gv[2][0]);
  if (!(m1 > 0 && m2 > 0 && m3 > 0))
    throw ContractViolation("orientation_positive requires a positive definite 3-space");

  // Coefficients of the projection of g(v_i) in the basis v: solve the 3x3
  // rational system Gram_V * c = (<v_j, g v_i>)_j by Cramer's rule.
  Rat c[3][3];
  auto det3 = [](Rat a[3][3]) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  };
  for (int i = 0; i < 3; ++i) {
    Vec gvi = g.matrix * v[i];
    Rat rhs[3];
    for (int j = 0; j < 3; ++j) rhs[j] = Rat(pairing(l, v[j], gvi));
    for (int k = 0; k < 3; ++k) {
      Rat a[3][3];
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) a[r][s] = (s == k) ? rhs[r] : gv[r][s];
      c[k][i] = det3(a) / m3;
    }
  }
  Rat d = det3(c);
  if (d == 0) throw ContractViolation("projected isometry is singular on the 3-space");
  return d > 0 ? 1 : -1;
}

}  // namespace k3lat
