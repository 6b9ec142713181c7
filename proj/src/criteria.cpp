#include "k3lat/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <string>

namespace k3lat {

AdmissibilityReport bcns_admissible(const Int& t) {
  if (t < 2) throw ContractViolation("bcns_admissible requires t >= 2");
  AdmissibilityReport r;
  r.t = t;
  r.is_square = is_perfect_square(t);
  if (r.is_square) return r;
  r.neg_pell = pell_min(t, -1);
  r.p4t5 = genpell(4 * t, 5);
  r.admissible = r.neg_pell.has_value() && !r.p4t5->solvable;
  if (r.admissible) {
    Int a = r.neg_pell->x, b = r.neg_pell->y;
    r.involution_class = Vec{b, -a};
    Lattice amb = direct_sum(standard(StandardLattice::TWO_T, t),
                             standard(StandardLattice::MINUS_TWO));
    r.involution_square = square(amb, *r.involution_class);
    if (*r.involution_square != 2)
      throw ContractViolation("internal error: admissible class has square != 2");
  }
  return r;
}

std::vector<AdmissibilityReport> bcns_scan_serial(const Int& lo, const Int& hi) {
  if (lo < 2 || hi < lo) throw ContractViolation("bcns_scan requires 2 <= lo <= hi");
  std::vector<AdmissibilityReport> out;
  for (Int t = lo; t <= hi; ++t) out.push_back(bcns_admissible(t));
  return out;
}

std::vector<AdmissibilityReport> bcns_scan(const Int& lo, const Int& hi) {
  if (lo < 2 || hi < lo) throw ContractViolation("bcns_scan requires 2 <= lo <= hi");
  long n = long(hi - lo) + 1;
  std::vector<AdmissibilityReport> out(static_cast<size_t>(n));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (long i = 0; i < n; ++i) out[size_t(i)] = bcns_admissible(lo + i);
  return out;
}

std::pair<Lattice, Vec> hilbert_square_ns(const Lattice& ns_s) {
  Lattice dl = make_lattice(Mat{{-2}}, "<-2>", {"\xce\xb4"});  // named delta
  if (ns_s.rank == 0) return {dl, Vec{1}};
  Lattice named = ns_s;
  if (int(named.basis_names.size()) != named.rank) {
    named.basis_names.clear();
    for (int i = 0; i < named.rank; ++i) named.basis_names.push_back(ns_s.name_of(i));
  }
  if (named.label.empty()) named.label = "NS";
  Lattice l = direct_sum(named, dl);
  Vec delta(size_t(l.rank), 0);
  delta.back() = 1;
  return {l, delta};
}

Lattice family_lattice(const Int& alpha) {
  if (alpha < 1) throw ContractViolation("family_lattice requires alpha >= 1");
  Int b = 4 + 2 * alpha;
  return make_lattice(Mat{{4, b}, {b, 4}}, "L_" + alpha.str(), {"h1", "h2"});
}

SaintDonatBattery saint_donat_battery(const Lattice& ns_s, const Vec& d) {
  SaintDonatBattery out;
  out.lattice = ns_s;
  out.d = d;
  out.hyperelliptic = constrained_class(ns_s, d, 0, 2);
  out.free_pencil = constrained_class(ns_s, d, 0, 1);
  out.contracted = constrained_class(ns_s, d, -2, 0);
  out.line = constrained_class(ns_s, d, -2, 1);
  out.minus_two_classes = represents(ns_s, -2);
  return out;
}

std::pair<Isometry, SaintDonatBattery> beauville_involution(const Lattice& ns_s, const Vec& h) {
  if (square(ns_s, h) != 4)
    throw ContractViolation("beauville_involution requires q(H) = 4");
  auto [amb, delta] = hilbert_square_ns(ns_s);
  Vec d = h;
  d.push_back(-1);
  Isometry iso = reflection_fix(amb, d);
  return {std::move(iso), saint_donat_battery(ns_s, h)};
}

DoubleBeauvilleReport double_beauville(const Int& alpha) {
  Lattice l = family_lattice(alpha);
  auto [amb, delta] = hilbert_square_ns(l);
  Isometry s1 = reflection_fix(amb, Vec{1, 0, -1});
  Isometry s2 = reflection_fix(amb, Vec{0, 1, -1});
  Isometry kappa = compose(compose(s1, s2), s1);
  Vec d_alpha{2 + 2 * alpha, -1, -(2 * alpha + 1)};

  Isometry expected = reflection_fix(amb, d_alpha);
  if (!(kappa.matrix == expected.matrix))
    throw ContractViolation("double_beauville: composite differs from the reflection in D_alpha");
  if (!is_involution(kappa))
    throw ContractViolation("double_beauville: composite is not an involution");
  std::vector<Vec> inv = invariant_sublattice(kappa);
  Vec neg{-d_alpha[0], -d_alpha[1], -d_alpha[2]};
  if (inv.size() != 1 || !(inv[0] == d_alpha || inv[0] == neg))
    throw ContractViolation("double_beauville: invariant lattice is not Z * D_alpha");
  Int sq = square(amb, d_alpha);
  if (sq != 2) throw ContractViolation("double_beauville: fixed class has square != 2");

  DoubleBeauvilleReport r;
  r.alpha = alpha;
  r.lattice = amb;
  r.kappa = std::move(kappa);
  r.fixed_class = d_alpha;
  r.fixed_square = sq;
  r.is_beauville_form = abs(d_alpha.back()) == 1;
  return r;
}

bool positive_cone_member(const Lattice& l, const Vec& d, const Vec& ref) {
  if (!is_hyperbolic(l)) throw ContractViolation("positive_cone_member requires a hyperbolic lattice");
  if (square(l, ref) <= 0) throw ContractViolation("positive_cone_member requires q(ref) > 0");
  return square(l, d) > 0 && pairing(l, d, ref) > 0;
}

NodalReport nodal_verify(int k) {
  if (k < 1 || k > 20) throw ContractViolation("nodal_verify requires 1 <= k <= 20");
  Mat g(k + 1, k + 1);
  g.at(0, 0) = 4 + 2 * k;
  std::vector<std::string> names{"H"};
  for (int i = 1; i <= k; ++i) {
    g.at(i, i) = -2;
    names.push_back("e" + std::to_string(i));
  }
  NodalReport r;
  r.k = k;
  r.lattice = make_lattice(g, "R_" + std::to_string(k), std::move(names));
  r.square4_class = Vec(size_t(k) + 1, -1);
  r.square4_class[0] = 1;
  r.square4 = square(r.lattice, r.square4_class);
  r.even_pairings = even_pairing_lattice(r.lattice);
  r.disc = discriminant_group(r.lattice);
  r.morrison = morrison_embeddable(r.lattice);
  r.obstruction = transcendental_obstruction(r.lattice);
  return r;
}

namespace {

// Shared bookkeeping for a claim made of many sub-checks: pass iff every
// expectation holds; the first failure is kept as a counterexample.
struct Checker {
  ClaimResult& r;
  long checks = 0;

  explicit Checker(ClaimResult& res) : r(res) { r.pass = true; }

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && r.pass) {
      r.pass = false;
      r.detail["counterexample"] = what;
    }
  }

  ~Checker() { r.detail["checks"] = checks; }
};

bool empty_with_good_cert(const RepresentationDecision& dec) {
  return !dec.has_witness() && dec.certificate && check_certificate(*dec.certificate);
}

void claim_reflection_law(ClaimResult& r, const VerifyOptions& opts) {
  Checker c(r);
  Lattice quartic = opts.quartic_gram_override
                        ? make_lattice(*opts.quartic_gram_override, "<4>", {"H"})
                        : make_lattice(Mat{{4}}, "<4>", {"H"});
  auto [amb, delta] = hilbert_square_ns(quartic);
  Vec d{1, -1};
  Isometry refl = reflection_fix(amb, d);
  c.expect(is_involution(refl), "reflection on diag(4,-2) is not an involution");
  std::vector<Vec> inv = invariant_sublattice(refl);
  c.expect(inv.size() == 1 && (inv[0] == d || inv[0] == Vec{-1, 1}),
           "invariant lattice of the rank-2 reflection is not Z * (H - delta)");
  // image of H under v -> <v,D>D - v must be 3H - 4*delta
  c.expect(refl.matrix.at(0, 0) == 3 && refl.matrix.at(1, 0) == -4,
           "reflection image of H is not 3H - 4delta");

  Lattice big = standard(StandardLattice::K3_SQ);
  Vec v(size_t(big.rank), 0);
  v[0] = 1;
  v[1] = 1;  // e + f in the first hyperbolic plane, square 2, primitive
  c.expect(square(big, v) == 2 && is_primitive_vector(big, v), "chosen class has square != 2");
  Isometry big_refl = reflection_fix(big, v);
  c.expect(is_involution(big_refl), "rank-23 reflection is not an involution");
  std::vector<Vec> big_inv = invariant_sublattice(big_refl);
  c.expect(big_inv.size() == 1, "rank-23 reflection invariant lattice has rank != 1");
  Vec p1 = v, p2(size_t(big.rank), 0), p3(size_t(big.rank), 0);
  p2[2] = 1; p2[3] = 1;
  p3[4] = 1; p3[5] = 1;
  c.expect(orientation_positive(big_refl, {p1, p2, p3}) == 1,
           "reflection reverses the orientation of the positive 3-space");
}

void claim_bcns_family(ClaimResult& r) {
  Checker c(r);
  for (Int alpha = 1; alpha <= 100; ++alpha) {
    Int t = (2 * alpha + 1) * (2 * alpha + 1) + 1;
    AdmissibilityReport rep = bcns_admissible(t);
    std::string tag = "t = " + t.str();
    c.expect(rep.admissible, tag + " not admissible");
    c.expect(rep.neg_pell && rep.neg_pell->x == 2 * alpha + 1 && rep.neg_pell->y == 1,
             tag + " minimal negative solution is not (2a+1, 1)");
    bool mod8 = rep.p4t5 && !rep.p4t5->solvable && rep.p4t5->certificate &&
                rep.p4t5->certificate->kind == CertKind::ModularObstruction &&
                rep.p4t5->certificate->payload.at("modulus") == "8";
    c.expect(mod8, tag + " lacks the mod-8 obstruction for x^2 - 4t y^2 = 5");
  }
}

void claim_bcns_scan(ClaimResult& r) {
  Checker c(r);
  std::vector<AdmissibilityReport> reports = bcns_scan(2, 1000);
  const std::set<long> known{2, 10, 13, 26, 50};
  for (const AdmissibilityReport& rep : reports) {
    std::string tag = "t = " + rep.t.str();
    if (rep.is_square) c.expect(!rep.admissible, tag + " square marked admissible");
    if (rep.admissible)
      c.expect(rep.involution_square && *rep.involution_square == 2,
               tag + " admissible without a square-2 class");
    if (rep.t == 5) {
      bool witnessed = rep.p4t5 && rep.p4t5->solvable;
      if (witnessed) {
        witnessed = false;
        for (const PellSolution& s : rep.p4t5->solutions)
          witnessed = witnessed || (s.x == 5 && s.y == 1);
      }
      c.expect(!rep.admissible && witnessed, "t = 5 lacks the witness (5,1) for x^2 - 20y^2 = 5");
    }
    if (known.count(long(rep.t))) c.expect(rep.admissible, tag + " expected admissible");
  }
}

void claim_double_beauville(ClaimResult& r) {
  Checker c(r);
  for (Int alpha = 1; alpha <= 50; ++alpha) {
    DoubleBeauvilleReport rep = double_beauville(alpha);  // asserts internally
    std::string tag = "alpha = " + alpha.str();
    c.expect(rep.fixed_square == 2, tag + " fixed square != 2");
    c.expect(!rep.is_beauville_form, tag + " unexpectedly of Beauville form");
  }
}

void claim_no_minus_two(ClaimResult& r, const VerifyOptions& opts) {
  Checker c(r);
  for (Int alpha = 1; alpha <= 50; ++alpha) {
    Lattice l = family_lattice(alpha);
    std::string tag = "alpha = " + alpha.str();
    RepresentationDecision dec = represents(l, -2);
    c.expect(empty_with_good_cert(dec), tag + " -2 decision not Empty-with-certificate");
    c.expect(!brute_oracle(l, -2, std::nullopt, opts.oracle_bound),
             tag + " oracle found a (-2)-class");
  }
}

void claim_very_ample(ClaimResult& r) {
  Checker c(r);
  for (Int alpha = 1; alpha <= 20; ++alpha) {
    Lattice l = family_lattice(alpha);
    Vec ref{1, 1};
    std::vector<Vec> classes{{1, 0}, {0, 1}, {2 + 2 * alpha, -1}, {-1, 2 + 2 * alpha}};
    for (const Vec& d : classes) {
      std::string tag = "alpha = " + alpha.str() + ", class (" + d[0].str() + "," + d[1].str() + ")";
      c.expect(positive_cone_member(l, d, ref), tag + " outside the positive cone");
      SaintDonatBattery b = saint_donat_battery(l, d);
      c.expect(empty_with_good_cert(b.hyperelliptic), tag + " hyperelliptic check not Empty");
      c.expect(empty_with_good_cert(b.line), tag + " line check not Empty");
      c.expect(empty_with_good_cert(b.contracted), tag + " contracted check not Empty");
    }
  }
}

void claim_one_node(ClaimResult& r) {
  Checker c(r);
  Lattice ns = make_lattice(Mat{{6, 0}, {0, -2}}, "<6> + <-2>", {"H", "e"});
  Vec d{1, -1};
  c.expect(square(ns, d) == 4, "q(H - e) != 4");
  SaintDonatBattery b = saint_donat_battery(ns, d);
  bool contracted_forced = empty_with_good_cert(b.contracted) &&
                           b.contracted.certificate->kind == CertKind::ExactContradiction &&
                           b.contracted.certificate->payload.at("form") == "quadratic";
  c.expect(contracted_forced, "contracted check not Empty via forced equation");
  bool line_parity = empty_with_good_cert(b.line) &&
                     b.line.certificate->kind == CertKind::ExactContradiction &&
                     b.line.certificate->payload.at("form") == "linear";
  c.expect(line_parity, "line check not Empty via parity");
}

void claim_nodal_family(ClaimResult& r) {
  Checker c(r);
  for (int k = 1; k <= 16; ++k) {
    NodalReport rep = nodal_verify(k);
    std::string tag = "k = " + std::to_string(k);
    c.expect(rep.square4 == 4, tag + " square-4 class fails");
    c.expect(rep.even_pairings, tag + " has an odd pairing");
    c.expect(rep.disc.length() == k + 1, tag + " discriminant length != k+1");
    c.expect(rep.morrison == (k <= 9), tag + " embedding criterion mismatch");
    if (k <= 10)
      c.expect(rep.obstruction == Obstruction::Consistent, tag + " unexpectedly obstructed");
    else
      c.expect(rep.obstruction == Obstruction::Impossible, tag + " obstruction missed");
  }
}

void claim_oracle_equivalence(ClaimResult& r, const VerifyOptions& opts) {
  Checker c(r);
  std::mt19937_64 rng(0x5eed2026);
  std::uniform_int_distribution<long> half(-10, 10), off(-20, 20), small(-3, 3);

  auto check_decision = [&](const Lattice& l, const RepresentationDecision& dec, const Int& n,
                            const std::optional<PairingConstraint>& pc, const std::string& tag) {
    if (dec.has_witness()) {
      Vec w = *dec.witness;
      bool nonzero = false;
      for (const Int& x : w) nonzero = nonzero || x != 0;
      bool ok = nonzero && square(l, w) == n && (!pc || pairing(l, w, pc->d) == pc->value);
      c.expect(ok, tag + " witness fails its equations");
    } else {
      c.expect(dec.certificate && check_certificate(*dec.certificate),
               tag + " Empty verdict without a valid certificate");
      c.expect(!brute_oracle(l, n, pc, opts.oracle_bound), tag + " oracle contradicts Empty");
    }
  };

  for (int i = 0; i < 100; ++i) {
    Lattice l;
    while (true) {
      Int a = 2 * half(rng), cc = 2 * half(rng), b = off(rng);
      if (a * cc - b * b == 0) continue;
      l = make_lattice(Mat{{a, b}, {b, cc}}, "rnd" + std::to_string(i));
      break;
    }
    for (long n = -10; n <= 10; ++n)
      check_decision(l, n == 0 ? isotropic_exists(l) : represents(l, n), n, std::nullopt,
                     l.label + " N = " + std::to_string(n));

    Vec d{small(rng), small(rng)};
    if (d[0] == 0 && d[1] == 0) d[0] = 1;
    const std::pair<long, long> combos[] = {{-2, 0}, {0, 1}, {2, 2}};
    for (auto [sq, pr] : combos) {
      PairingConstraint pc{d, pr};
      check_decision(l, constrained_class(l, d, sq, pr), sq, pc,
                     l.label + " constrained (" + std::to_string(sq) + "," + std::to_string(pr) + ")");
    }
  }
}

// floor sqrt for uint64 via hardware sqrt plus correction.
inline int64_t isqrt64(int64_t n) {
  int64_t s = int64_t(std::sqrt(double(n)));
  while (s > 0 && s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

void claim_pell_soundness(ClaimResult& r) {
  Checker c(r);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (long dd = 2; dd <= 2000; ++dd) {
    int64_t rt = isqrt64(dd);
    if (rt * rt == dd) continue;
    CFExpansion cf = cf_sqrt(dd);
    std::optional<PellSolution> pm = pell_min(dd, -1);
    // independent brute force: smallest y <= 10^4 with D y^2 - 1 a square
    std::optional<PellSolution> brute;
    for (int64_t y = 1; y <= 10000 && !brute; ++y) {
      int64_t v = dd * y * y - 1;
      int64_t x = isqrt64(v);
      if (x * x == v) brute = PellSolution{x, y};
    }
    bool ok = (pm.has_value() == (cf.period.size() % 2 == 1));
    if (pm && pm->y <= 10000)
      ok = ok && brute && brute->x == pm->x && brute->y == pm->y;
    else
      ok = ok && !brute;
    if (pm) ok = ok && pm->x * pm->x - Int(dd) * pm->y * pm->y == -1;
#ifdef _OPENMP
#pragma omp critical(k3lat_pell_claim)
#endif
    c.expect(ok, "D = " + std::to_string(dd) + " negative Pell mismatch");
  }
}

}  // namespace

VerifyReport verify_paper(const VerifyOptions& opts) {
  VerifyReport report;
  auto run = [&](const std::string& id, auto&& fn) {
    ClaimResult res;
    res.id = id;
    try {
      fn(res);
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail["error"] = e.what();
    }
    report.all_pass = report.all_pass && res.pass;
    report.claims.push_back(std::move(res));
  };

  run("reflection_law", [&](ClaimResult& r) { claim_reflection_law(r, opts); });
  run("bcns_family", [&](ClaimResult& r) { claim_bcns_family(r); });
  run("bcns_scan", [&](ClaimResult& r) { claim_bcns_scan(r); });
  run("double_beauville", [&](ClaimResult& r) { claim_double_beauville(r); });
  run("no_minus_two_classes", [&](ClaimResult& r) { claim_no_minus_two(r, opts); });
  run("very_ample_battery", [&](ClaimResult& r) { claim_very_ample(r); });
  run("one_node", [&](ClaimResult& r) { claim_one_node(r); });
  run("nodal_family", [&](ClaimResult& r) { claim_nodal_family(r); });
  run("oracle_equivalence", [&](ClaimResult& r) { claim_oracle_equivalence(r, opts); });
  run("pell_soundness", [&](ClaimResult& r) { claim_pell_soundness(r); });
  return report;
}

}  // namespace k3lat
