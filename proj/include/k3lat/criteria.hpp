#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "k3lat/binform.hpp"
#include "k3lat/isometry.hpp"
#include "k3lat/pell.hpp"

namespace k3lat {

// Arithmetic admissibility of a polarization degree 2t: t nonsquare,
// x^2 - t y^2 = -1 solvable, x^2 - 4t y^2 = 5 unsolvable. When admissible
// the minimal (a, b) with a^2 - t b^2 = -1 yields the square-2 class
// D = b*h - a*delta in <2t> (+) <-2>.
struct AdmissibilityReport {
  Int t;
  bool is_square = false;
  std::optional<PellSolution> neg_pell;   // minimal solution of x^2 - t y^2 = -1
  std::optional<PellOutcome> p4t5;        // x^2 - 4t y^2 = 5 (absent when t is square)
  bool admissible = false;
  std::optional<Vec> involution_class;    // (b, -a) in <2t> (+) <-2>
  std::optional<Int> involution_square;   // always 2 when admissible
};

AdmissibilityReport bcns_admissible(const Int& t);

// Reports for every t in [lo, hi], in order. The parallel version splits the
// range across threads; output is identical to the serial reference.
std::vector<AdmissibilityReport> bcns_scan(const Int& lo, const Int& hi);
std::vector<AdmissibilityReport> bcns_scan_serial(const Int& lo, const Int& hi);

// nsS (+) Z*delta with delta of square -2 in the last coordinate.
std::pair<Lattice, Vec> hilbert_square_ns(const Lattice& ns_s);

// The rank-2 lattice with Gram [[4, 4+2a],[4+2a, 4]], basis h1, h2.
Lattice family_lattice(const Int& alpha);

// Arithmetic sub-checks behind the very-ampleness / no-line arguments, run
// in the rank <= 2 lattice nsS against the polarization d.
struct SaintDonatBattery {
  Lattice lattice;
  Vec d;
  RepresentationDecision hyperelliptic;      // E^2 = 0,  E.d = 2
  RepresentationDecision free_pencil;        // E^2 = 0,  E.d = 1
  RepresentationDecision contracted;         // C^2 = -2, C.d = 0
  RepresentationDecision line;               // C^2 = -2, C.d = 1
  RepresentationDecision minus_two_classes;  // q = -2, unconstrained
  bool paper_inference = true;  // geometric conclusion is inferred, not decided
};

SaintDonatBattery saint_donat_battery(const Lattice& ns_s, const Vec& d);

// Reflection in H - delta on nsS (+) Z*delta, for q(H) = 4, together with
// the battery for d = H on nsS. Battery failures are recorded, not fatal.
std::pair<Isometry, SaintDonatBattery> beauville_involution(const Lattice& ns_s, const Vec& h);

struct DoubleBeauvilleReport {
  Int alpha;
  Lattice lattice;  // family_lattice(alpha) (+) Z*delta
  Isometry kappa;   // s1 s2 s1, si = reflection in hi - delta
  Vec fixed_class;  // D_alpha = (2+2a) h1 - h2 - (2a+1) delta
  Int fixed_square; // always 2
  bool is_beauville_form;  // |delta coefficient| = 1; false for every alpha
};

// Composite involution s1 s2 s1; asserts it equals the reflection in
// D_alpha entrywise, has rank-1 invariant lattice spanned by D_alpha,
// and fixed square 2. Assertion failures raise ContractViolation.
DoubleBeauvilleReport double_beauville(const Int& alpha);

// d lies in the same component of {q > 0} as ref: q(d) > 0 and <d,ref> > 0.
bool positive_cone_member(const Lattice& l, const Vec& d, const Vec& ref);

struct NodalReport {
  int k = 0;
  Lattice lattice;          // R_k = <4+2k> (+) <-2>^k
  Vec square4_class;        // H_k - sum of the e_i
  Int square4;              // always 4
  bool even_pairings = false;
  DiscriminantGroup disc;   // length k+1
  bool morrison;            // embedding criterion, k <= 9
  Obstruction obstruction;  // Consistent iff k <= 10
};

NodalReport nodal_verify(int k);

struct ClaimResult {
  std::string id;
  bool pass = false;
  Json detail;
};

struct VerifyOptions {
  long oracle_bound = 1000;
  // Test hook: replaces the Gram of the quartic model in the reflection-law
  // claim, so a deliberate typo produces a named counterexample.
  std::optional<Mat> quartic_gram_override;
};

struct VerifyReport {
  std::vector<ClaimResult> claims;
  bool all_pass = true;
};

VerifyReport verify_paper(const VerifyOptions& opts = {});

}  // namespace k3lat
