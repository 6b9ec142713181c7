#pragma once

#include <optional>

#include "k3lat/certificate.hpp"
#include "k3lat/lattice.hpp"

namespace k3lat {

// Outcome of a representation query: either an exact witness vector or a
// re-checkable certificate of emptiness. Witnesses are always nonzero and
// re-verified against the defining equations before being returned.
struct RepresentationDecision {
  std::optional<Vec> witness;
  std::optional<Certificate> certificate;

  bool has_witness() const { return witness.has_value(); }
};

// Optional linear side condition <v, d> = value for oracle scans.
struct PairingConstraint {
  Vec d;
  Int value;
};

// Does the rank-1 or rank-2 form represent N by a nonzero vector?
// Complete decision with witness or certificate.
RepresentationDecision represents(const Lattice& l, const Int& n);

// Nonzero isotropic vector in a rank-2 lattice; exists iff -det is a
// perfect square.
RepresentationDecision isotropic_exists(const Lattice& l);

// Class E with q(E) = square and <E, d> = pairing, d != 0, rank <= 2.
RepresentationDecision constrained_class(const Lattice& l, const Vec& d,
                                         const Int& square, const Int& pairing_target);

// Exhaustive box scan |x_i| <= bound in the order 0, 1, -1, 2, -2, ...
// per coordinate; returns the first witness in that order, skipping the
// zero vector. A miss is not a certificate. OpenMP-parallel over the
// leading coordinate; result identical to brute_oracle_serial.
std::optional<Vec> brute_oracle(const Lattice& l, const Int& n,
                                const std::optional<PairingConstraint>& constraint,
                                long bound);

// Serial reference implementation kept for testing the parallel kernel.
std::optional<Vec> brute_oracle_serial(const Lattice& l, const Int& n,
                                       const std::optional<PairingConstraint>& constraint,
                                       long bound);

// True iff every Gram entry is even, i.e. all pairings are even.
bool even_pairing_lattice(const Lattice& l);

}  // namespace k3lat
