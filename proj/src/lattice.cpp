#include "k3lat/lattice.hpp"

#include <numeric>
#include <utility>

namespace k3lat {

std::string Lattice::name_of(int i) const {
  if (i >= 0 && i < int(basis_names.size())) return basis_names[i];
  return "b" + std::to_string(i + 1);
}

Int DiscriminantGroup::order() const {
  Int o = 1;
  for (const Int& d : invariant_factors) o *= d;
  return o;
}

Lattice make_lattice(const Mat& gram, std::string label,
                     std::vector<std::string> basis_names) {
  if (gram.rows() != gram.cols()) throw ContractViolation("Gram matrix must be square");
  if (!gram.is_symmetric()) throw ContractViolation("Gram matrix must be symmetric");
  Lattice l;
  l.rank = gram.rows();
  l.gram = gram;
  l.label = std::move(label);
  l.basis_names = std::move(basis_names);
  l.det = gram.det();
  if (l.rank > 0 && l.det == 0)
    throw DegenerateLattice("Gram matrix is degenerate (determinant zero)");
  l.even = true;
  for (int i = 0; i < l.rank; ++i)
    if (l.gram.at(i, i) % 2 != 0) { l.even = false; break; }
  return l;
}

namespace {

// E8 as the T(2,3,5) tree: branch node with legs of 1, 2 and 4 edges.
Mat e8_gram() {
  Mat g(8, 8);
  for (int i = 0; i < 8; ++i) g.at(i, i) = 2;
  const int edges[7][2] = {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 7}};
  for (auto& e : edges) {
    g.at(e[0], e[1]) = -1;
    g.at(e[1], e[0]) = -1;
  }
  return g;
}

}  // namespace

Lattice standard(StandardLattice which, const Int& t) {
  switch (which) {
    case StandardLattice::U:
      return make_lattice(Mat{{0, 1}, {1, 0}}, "U", {"e", "f"});
    case StandardLattice::E8_MINUS: {
      Mat g = e8_gram();
      for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) g.at(i, j) = -g.at(i, j);
      return make_lattice(g, "E8(-1)");
    }
    case StandardLattice::TWO_T: {
      if (t < 1) throw ContractViolation("TWO_T requires t >= 1");
      Mat g(1, 1);
      g.at(0, 0) = 2 * t;
      return make_lattice(g, "<" + g.at(0, 0).str() + ">", {"h"});
    }
    case StandardLattice::MINUS_TWO:
      return make_lattice(Mat{{-2}}, "<-2>", {"d"});
    case StandardLattice::K3: {
      Lattice u = standard(StandardLattice::U);
      Lattice l = direct_sum(direct_sum(u, u), u);
      Lattice e8m = standard(StandardLattice::E8_MINUS);
      l = direct_sum(direct_sum(l, e8m), e8m);
      l.label = "K3";
      l.basis_names.clear();
      return l;
    }
    case StandardLattice::K3_SQ: {
      Lattice l = direct_sum(standard(StandardLattice::K3), standard(StandardLattice::MINUS_TWO));
      l.label = "K3_SQ";
      l.basis_names.clear();
      return l;
    }
  }
  throw ContractViolation("unknown standard lattice");
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  Mat g(a.rank + b.rank, a.rank + b.rank);
  for (int i = 0; i < a.rank; ++i)
    for (int j = 0; j < a.rank; ++j) g.at(i, j) = a.gram.at(i, j);
  for (int i = 0; i < b.rank; ++i)
    for (int j = 0; j < b.rank; ++j) g.at(a.rank + i, a.rank + j) = b.gram.at(i, j);
  std::string label;
  if (!a.label.empty() && !b.label.empty()) label = a.label + " + " + b.label;
  std::vector<std::string> names;
  if (int(a.basis_names.size()) == a.rank && int(b.basis_names.size()) == b.rank) {
    names = a.basis_names;
    names.insert(names.end(), b.basis_names.begin(), b.basis_names.end());
  }
  return make_lattice(g, std::move(label), std::move(names));
}

Int pairing(const Lattice& l, const Vec& v, const Vec& w) {
  if (int(v.size()) != l.rank || int(w.size()) != l.rank)
    throw AmbientMismatch("vector length does not match lattice rank");
  Int s = 0;
  for (int i = 0; i < l.rank; ++i) {
    if (v[i] == 0) continue;
    Int row = 0;
    for (int j = 0; j < l.rank; ++j) row += l.gram.at(i, j) * w[j];
    s += v[i] * row;
  }
  return s;
}

std::pair<int, int> signature(const Lattice& l) {
  int n = l.rank;
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rat(l.gram.at(i, j));
  int pos = 0, neg = 0;
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      // bring a nonzero diagonal entry to position k, creating one with the
      // hyperbolic substitution e_k -> e_k + e_j if the diagonal is flat zero
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][i] != 0) { p = i; break; }
      if (p >= 0) {
        std::swap(a[k], a[p]);
        for (int i = 0; i < n; ++i) std::swap(a[i][k], a[i][p]);
      } else {
        int j = -1;
        for (int i = k + 1; i < n; ++i)
          if (a[k][i] != 0) { j = i; break; }
        if (j < 0) throw DegenerateLattice("degenerate block in signature computation");
        for (int i = 0; i < n; ++i) a[k][i] += a[j][i];
        for (int i = 0; i < n; ++i) a[i][k] += a[i][j];
      }
    }
    Rat piv = a[k][k];
    if (piv > 0) ++pos; else ++neg;
    // Schur complement of the pivot; stays symmetric.
    for (int i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rat f = a[i][k] / piv;
      for (int j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
    }
    for (int i = k + 1; i < n; ++i) { a[i][k] = 0; a[k][i] = 0; }
  }
  return {pos, neg};
}

DiscriminantGroup discriminant_group(const Lattice& l) {
  SmithResult snf = smith_normal_form(l.gram);
  DiscriminantGroup g;
  for (int i = 0; i < l.rank; ++i) {
    Int d = snf.s.at(i, i);
    if (d > 1) g.invariant_factors.push_back(d);
  }
  return g;
}

bool is_primitive_vector(const Lattice& l, const Vec& v) {
  if (int(v.size()) != l.rank) throw AmbientMismatch("vector length does not match lattice rank");
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g == 0) throw ContractViolation("primitivity of the zero vector is undefined");
  return g == 1;
}

Obstruction transcendental_obstruction(const Lattice& l) {
  if (!is_hyperbolic(l)) throw ContractViolation("transcendental_obstruction requires a hyperbolic lattice");
  if (!l.even) throw ContractViolation("transcendental_obstruction requires an even lattice");
  if (l.rank > 21) throw ContractViolation("transcendental_obstruction requires rank <= 21");
  int len = discriminant_group(l).length();
  return len > 22 - l.rank ? Obstruction::Impossible : Obstruction::Consistent;
}

bool morrison_embeddable(const Lattice& l) {
  if (!l.even || l.rank > 10) return false;
  return is_hyperbolic(l);
}

}  // namespace k3lat
