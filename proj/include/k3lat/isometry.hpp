#pragma once

#include <array>

#include "k3lat/lattice.hpp"

namespace k3lat {

// Integer matrix M with M^T G M = G; checked at construction. Vectors are
// columns, so composition g after h is the product g.matrix * h.matrix.
struct Isometry {
  Mat matrix;
  Lattice ambient;
};

Isometry make_isometry(const Lattice& l, const Mat& m);

Isometry identity_isometry(const Lattice& l);

// v -> <v,D> D - v; fixes D, acts as -1 on the orthogonal complement.
// Integral exactly when D^2 = 2.
Isometry reflection_fix(const Lattice& l, const Vec& d);

// v -> v - <v,D> D, the hyperplane reflection; integral when D^2 = -2.
Isometry reflection_neg(const Lattice& l, const Vec& d);

Isometry compose(const Isometry& g, const Isometry& h);

bool is_involution(const Isometry& g);

// Basis of the saturated invariant sublattice ker(M - I).
std::vector<Vec> invariant_sublattice(const Isometry& g);

// Sign of det of (project onto span V) o g restricted to V, V a basis of a
// positive definite 3-space. +1 means g preserves its orientation.
int orientation_positive(const Isometry& g, const std::array<Vec, 3>& v);

}  // namespace k3lat
