#pragma once

#include <string>

#include "k3lat/criteria.hpp"

namespace k3lat {

// All integers serialize as decimal strings so arbitrary precision survives
// any JSON parser; parsing accepts plain JSON integers as well.

Json vec_json(const Vec& v);
Vec vec_from_json(const Json& j);

Json mat_json(const Mat& m);
Mat mat_from_json(const Json& j);

Json lattice_json(const Lattice& l);
// Accepts either a bare Gram array or {gram, label?, basis_names?}.
Lattice lattice_from_json(const Json& j);

Json isometry_json(const Isometry& g);

Json pell_solution_json(const PellSolution& s);
Json pell_outcome_json(const PellOutcome& o);
Json decision_json(const RepresentationDecision& d);
Json disc_group_json(const DiscriminantGroup& g);
Json admissibility_json(const AdmissibilityReport& r);
Json battery_json(const SaintDonatBattery& b);
Json double_beauville_json(const DoubleBeauvilleReport& r);
Json nodal_json(const NodalReport& r);
Json verify_json(const VerifyReport& r);

// Pretty form in the lattice's named basis, e.g. "4·h1 - h2 - 3·δ".
std::string class_in_basis(const Lattice& l, const Vec& v);

}  // namespace k3lat
