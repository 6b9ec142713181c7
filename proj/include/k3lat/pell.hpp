#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "k3lat/certificate.hpp"

namespace k3lat {

// Periodic continued fraction of sqrt(D), D >= 2 nonsquare.
struct CFExpansion {
  Int d;
  Int a0;                   // floor(sqrt(D))
  std::vector<Int> period;  // minimal period; last entry is 2*a0
};

struct PellSolution {
  Int x, y;
};

struct PellOutcome {
  Int d, n;
  bool solvable = false;
  std::vector<PellSolution> solutions;  // fundamental class representatives
  std::optional<Certificate> certificate;  // present iff unsolvable
};

CFExpansion cf_sqrt(const Int& d);

// Minimal positive solution of x^2 - D y^2 = n, n in {+1,-1}.
// For n = -1 a solution exists iff the period length is odd.
std::optional<PellSolution> pell_min(const Int& d, int n);

// Full solvability decision for x^2 - D y^2 = N, N != 0, with one
// representative per solution class when solvable and a certificate when not.
PellOutcome genpell(const Int& d, const Int& n);

// Independent unsolvability re-check via the classical convergent criterion,
// valid when N^2 < D; used when emitting and re-checking ConvergentExhaustion.
bool convergent_scan_finds_nothing(const Int& d, const Int& n);

// Class search only, no certificate machinery; certificate re-verification
// uses this to redo ClassExhaustion scans without recursing into genpell.
bool genpell_has_solution(const Int& d, const Int& n);

const std::vector<Int>& default_moduli();

// First modulus in the list with no solution of x^2 - D y^2 = N (mod m).
std::optional<Int> mod_obstruction(const Int& d, const Int& n,
                                   const std::vector<Int>& moduli = default_moduli());

// All solutions (x,y) of x^2 - D y^2 = N are generated from the class
// representatives by sign changes and powers of the fundamental unit
// (u, v) of x^2 - D y^2 = 1: (x, y) -> (u x + v D y, v x + u y).
PellSolution unit_apply(const Int& d, const PellSolution& unit, const PellSolution& s);

}  // namespace k3lat
