#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3lat/matrix.hpp"

namespace k3lat {

using Vec = std::vector<Int>;

// Integral lattice: a free Z-module with a nondegenerate symmetric Gram
// matrix. Immutable after construction; determinant and evenness cached.
struct Lattice {
  int rank = 0;
  Mat gram;
  std::string label;
  std::vector<std::string> basis_names;  // optional, used for pretty-printing
  Int det;
  bool even = true;

  std::string name_of(int i) const;
};

enum class StandardLattice { U, E8_MINUS, TWO_T, MINUS_TWO, K3, K3_SQ };

struct DiscriminantGroup {
  std::vector<Int> invariant_factors;  // d1 | d2 | ... , all > 1
  int length() const { return int(invariant_factors.size()); }
  Int order() const;
};

enum class Obstruction { Consistent, Impossible };

Lattice make_lattice(const Mat& gram, std::string label = "",
                     std::vector<std::string> basis_names = {});

// t is only used for TWO_T (the rank-1 lattice <2t>).
Lattice standard(StandardLattice which, const Int& t = 1);

Lattice direct_sum(const Lattice& a, const Lattice& b);

Int pairing(const Lattice& l, const Vec& v, const Vec& w);
inline Int square(const Lattice& l, const Vec& v) { return pairing(l, v, v); }

// Sylvester signature (p, n) by exact rational congruent diagonalization.
std::pair<int, int> signature(const Lattice& l);

inline bool is_hyperbolic(const Lattice& l) {
  return signature(l) == std::pair<int, int>{1, l.rank - 1};
}

DiscriminantGroup discriminant_group(const Lattice& l);

bool is_primitive_vector(const Lattice& l, const Vec& v);

// Necessary condition for an even hyperbolic lattice of rank <= 21 to be the
// Neron-Severi lattice of a K3 surface: the orthogonal complement in the K3
// lattice has rank 22 - rank(L) and carries the same discriminant group, so
// its length may not exceed 22 - rank(L).
Obstruction transcendental_obstruction(const Lattice& l);

// Sufficient embedding criterion: even, hyperbolic, rank <= 10.
bool morrison_embeddable(const Lattice& l);

}  // namespace k3lat
