#pragma once

#include <string>

#include <json.hpp>

#include "k3lat/int_types.hpp"

namespace k3lat {

using Json = nlohmann::ordered_json;

// Machine-checkable evidence for a non-existence verdict. Every certificate
// is self-contained: check_certificate re-verifies it from the payload alone.
enum class CertKind {
  ModularObstruction,    // x^2 - D y^2 = N has no solution mod m (full residue scan)
  ConvergentExhaustion,  // |N| < sqrt(D): no convergent of sqrt(D) yields N
  SquareParameter,       // D is a perfect square
  ClassExhaustion,       // finite class / orbit / box scan found nothing
  ExactContradiction,    // a forced equation with no integer solution
  NonSquareDiscriminant  // binary form has isotropic vectors iff -det is a square
};

std::string cert_kind_name(CertKind k);

struct Certificate {
  CertKind kind;
  Json payload;

  Json to_json() const;
};

// Re-verifies a serialized certificate by independent recomputation.
// Returns false when the payload does not actually certify anything.
bool check_certificate(const Json& doc);

inline bool check_certificate(const Certificate& c) { return check_certificate(c.to_json()); }

// Residue test used both when emitting and when checking modular
// obstructions: does x^2 - D y^2 = N (mod m) have a solution? D may be
// negative (transformed definite forms).
bool pell_congruence_solvable(const Int& d, const Int& n, const Int& m);

}  // namespace k3lat
