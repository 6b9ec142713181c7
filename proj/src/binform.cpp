#include "k3lat/binform.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "k3lat/pell.hpp"

namespace k3lat {

namespace {

// Enumeration order 0, 1, -1, 2, -2, ... used by the oracle.
inline long idx_val(long j) { return (j % 2) ? (j + 1) / 2 : -(j / 2); }

struct Egcd {
  Int g, x, y;  // p*x + q*y = g
};

Egcd egcd(const Int& p, const Int& q) {
  if (q == 0) return p >= 0 ? Egcd{p, 1, 0} : Egcd{-p, -1, 0};
  Egcd e = egcd(q, p % q);
  return Egcd{e.g, e.y, e.x - (p / q) * e.y};
}

void verify_witness(const Lattice& l, const Vec& w, const Int& n) {
  bool nonzero = false;
  for (const Int& x : w) nonzero = nonzero || x != 0;
  if (!nonzero || square(l, w) != n)
    throw ContractViolation("internal error: witness failed exact re-verification");
}

RepresentationDecision with_witness(const Lattice& l, Vec w, const Int& n) {
  verify_witness(l, w, n);
  return RepresentationDecision{std::move(w), std::nullopt};
}

RepresentationDecision with_cert(Certificate c) {
  if (!check_certificate(c))
    throw ContractViolation("internal error: emitted certificate failed re-verification");
  return RepresentationDecision{std::nullopt, std::move(c)};
}

Certificate exact_contradiction(Json payload) {
  return Certificate{CertKind::ExactContradiction, std::move(payload)};
}

Json form_context(const Int& a, const Int& b, const Int& c, const Int& n) {
  return Json{{"a", a.str()}, {"b", b.str()}, {"c", c.str()}, {"N", n.str()}};
}

RepresentationDecision represents_rank1(const Lattice& l, const Int& n) {
  Int a = l.gram.at(0, 0);
  if (n % a == 0 && is_perfect_square(n / a))
    return with_witness(l, Vec{isqrt(n / a) == 0 ? Int(1) : isqrt(n / a)}, n);
  return with_cert(exact_contradiction(Json{{"form", "rank1"}, {"a", a.str()}, {"N", n.str()}}));
}

// Solve a x^2 + 2b xy + c y^2 = N with a != 0 through the substitution
// X = a x + b y, giving X^2 - disc y^2 = a N with X = b y (mod a).
RepresentationDecision represents_main(const Lattice& l, const Int& a, const Int& b,
                                       const Int& c, const Int& n, bool swapped) {
  auto build = [&](const Int& xx, const Int& yy) {
    Vec w = swapped ? Vec{yy, xx} : Vec{xx, yy};
    return with_witness(l, std::move(w), n);
  };
  Int disc = b * b - a * c;
  Int m = a * n;

  if (disc < 0) {  // definite form
    if (sign_of(a) * sign_of(n) < 0)
      return with_cert(exact_contradiction(
          Json{{"form", "definite_sign"}, {"a", a.str()}, {"disc", disc.str()}, {"N", n.str()}}));
    Int ybound = isqrt(m / (-disc));
    for (Int y = 0; y <= ybound; ++y) {
      Int xx = m + disc * y * y;
      if (xx < 0 || !is_perfect_square(xx)) continue;
      Int x = isqrt(xx);
      for (const Int& xs : {x, -x})
        for (const Int& ys : {y, -y})
          if ((xs - b * ys) % a == 0) return build((xs - b * ys) / a, ys);
    }
    if (auto om = mod_obstruction(disc, m))
      return with_cert(Certificate{
          CertKind::ModularObstruction,
          Json{{"modulus", om->str()},
               {"equation", Json{{"type", "pell"}, {"D", disc.str()}, {"N", m.str()}}}}});
    Json p = form_context(a, b, c, n);
    p["method"] = "definite_box";
    return with_cert(Certificate{CertKind::ClassExhaustion, std::move(p)});
  }

  if (is_perfect_square(disc)) {  // split form: factor X^2 - s^2 y^2 = aN
    Int s = isqrt(disc);
    for (Int d1 = 1; d1 <= abs(m); ++d1) {
      if (m % d1 != 0) continue;
      for (const Int& u : {d1, -d1}) {
        Int v = m / u;
        if ((u + v) % 2 != 0 || (v - u) % (2 * s) != 0) continue;
        Int x = (u + v) / 2, y = (v - u) / (2 * s);
        if ((x - b * y) % a == 0) return build((x - b * y) / a, y);
      }
    }
    if (auto om = mod_obstruction(disc, m))
      return with_cert(Certificate{
          CertKind::ModularObstruction,
          Json{{"modulus", om->str()},
               {"equation", Json{{"type", "pell"}, {"D", disc.str()}, {"N", m.str()}}}}});
    Json p = form_context(a, b, c, n);
    p["method"] = "factor_pairs";
    return with_cert(Certificate{CertKind::ClassExhaustion, std::move(p)});
  }

  // indefinite, nonsquare discriminant: delegate to the Pell machinery
  PellOutcome out = genpell(disc, m);
  if (!out.solvable) return with_cert(*out.certificate);

  PellSolution unit = *pell_min(disc, 1);
  Int aa = abs(a);
  for (const PellSolution& rep : out.solutions) {
    for (int sx = -1; sx <= 1; sx += 2)
      for (int sy = -1; sy <= 1; sy += 2) {
        Int x0 = sx * rep.x, y0 = sy * rep.y;
        Int rx = mod_pos(x0, aa), ry = mod_pos(y0, aa);
        Int cx = rx, cy = ry;
        long k = 0;
        do {
          if (mod_pos(cx - b * cy, aa) == 0) {
            Int ex = x0, ey = y0;  // exact unit^k image of the start state
            for (long i = 0; i < k; ++i) {
              PellSolution t = unit_apply(disc, unit, PellSolution{ex, ey});
              ex = t.x; ey = t.y;
            }
            return build((ex - b * ey) / a, ey);
          }
          Int xn = mod_pos(unit.x * cx + unit.y * disc * cy, aa);
          Int yn = mod_pos(unit.y * cx + unit.x * cy, aa);
          cx = xn; cy = yn;
          ++k;
        } while (!(cx == rx && cy == ry));
      }
  }

  Json p = form_context(a, b, c, n);
  p["method"] = "unit_orbit_congruence";
  p["D"] = disc.str();
  p["M"] = m.str();
  p["u"] = unit.x.str();
  p["v"] = unit.y.str();
  Json reps = Json::array();
  for (const PellSolution& s : out.solutions) reps.push_back({s.x.str(), s.y.str()});
  p["representatives"] = std::move(reps);
  return with_cert(Certificate{CertKind::ClassExhaustion, std::move(p)});
}

}  // namespace

RepresentationDecision represents(const Lattice& l, const Int& n) {
  if (l.rank == 1) {
    if (n == 0) return isotropic_exists(l);
    return represents_rank1(l, n);
  }
  if (l.rank != 2) throw ContractViolation("represents requires rank 1 or 2");
  if (n == 0) return isotropic_exists(l);
  Int a = l.gram.at(0, 0), b = l.gram.at(0, 1), c = l.gram.at(1, 1);
  if (a == 0 && c == 0) {  // q = 2b xy
    Int tb = 2 * b;
    if (n % tb == 0) return with_witness(l, Vec{1, n / tb}, n);
    return with_cert(exact_contradiction(
        Json{{"form", "divisibility"}, {"divisor", tb.str()}, {"N", n.str()}}));
  }
  if (a != 0) return represents_main(l, a, b, c, n, false);
  return represents_main(l, c, b, a, n, true);
}

RepresentationDecision isotropic_exists(const Lattice& l) {
  if (l.rank == 1)
    return with_cert(exact_contradiction(
        Json{{"form", "rank1"}, {"a", l.gram.at(0, 0).str()}, {"N", "0"}}));
  if (l.rank != 2) throw ContractViolation("isotropic_exists requires rank 1 or 2");
  Int a = l.gram.at(0, 0), b = l.gram.at(0, 1), c = l.gram.at(1, 1);
  if (a == 0) return with_witness(l, Vec{1, 0}, 0);
  if (c == 0) return with_witness(l, Vec{0, 1}, 0);
  Int disc = b * b - a * c;  // equals -det
  if (disc > 0 && is_perfect_square(disc)) {
    Int s = isqrt(disc);
    Int x = s - b, y = a;
    Int g = gcd(x, y);
    return with_witness(l, Vec{x / g, y / g}, 0);
  }
  Json gram = Json::array({Json::array({a.str(), b.str()}), Json::array({b.str(), c.str()})});
  return with_cert(Certificate{CertKind::NonSquareDiscriminant,
                               Json{{"gram", std::move(gram)}, {"disc", disc.str()}}});
}

RepresentationDecision constrained_class(const Lattice& l, const Vec& d,
                                         const Int& square_target, const Int& pairing_target) {
  if (l.rank < 1 || l.rank > 2) throw ContractViolation("constrained_class requires rank 1 or 2");
  bool d_zero = true;
  for (const Int& x : d) d_zero = d_zero && x == 0;
  if (d_zero) throw ContractViolation("constrained_class requires d != 0");

  if (l.rank == 1) {
    Int p = l.gram.at(0, 0) * d[0];
    if (pairing_target % p != 0)
      return with_cert(exact_contradiction(Json{
          {"form", "linear"}, {"p", p.str()}, {"q", "0"}, {"b", pairing_target.str()}}));
    Int x = pairing_target / p;
    Int have = l.gram.at(0, 0) * x * x;
    if (x != 0 && have == square_target) return with_witness(l, Vec{x}, square_target);
    return with_cert(exact_contradiction(Json{
        {"form", "constant"}, {"C", have.str()}, {"target", square_target.str()}}));
  }

  Vec gd = l.gram * d;  // pairing functional <(x,y), d> = p x + q y
  Int p = gd[0], q = gd[1];
  Egcd e = egcd(p, q);
  if (pairing_target % e.g != 0)
    return with_cert(exact_contradiction(
        Json{{"form", "linear"}, {"p", p.str()}, {"q", q.str()}, {"b", pairing_target.str()}}));

  Int scale = pairing_target / e.g;
  Vec e0{e.x * scale, e.y * scale};      // particular solution of <E,d> = b
  Vec k{-q / e.g, p / e.g};              // direction of the solution line
  Int qa = square(l, k);
  Int qb = 2 * pairing(l, e0, k);
  Int qc = square(l, e0);

  auto line_point = [&](const Int& t) { return Vec{e0[0] + t * k[0], e0[1] + t * k[1]}; };
  auto nonzero = [](const Vec& v) { return v[0] != 0 || v[1] != 0; };

  if (qa != 0) {
    Int disc = qb * qb - 4 * qa * (qc - square_target);
    Json zero_roots = Json::array();
    if (disc >= 0 && is_perfect_square(disc)) {
      Int r = isqrt(disc);
      for (const Int& num : {-qb + r, -qb - r}) {
        if (num % (2 * qa) != 0) continue;
        Int t = num / (2 * qa);
        Vec w = line_point(t);
        if (nonzero(w)) return with_witness(l, std::move(w), square_target);
        zero_roots.push_back(t.str());
      }
    }
    Json payload{{"form", "quadratic"}, {"A", qa.str()}, {"B", qb.str()},
                 {"C", qc.str()}, {"target", square_target.str()}};
    if (!zero_roots.empty()) payload["zero_vector_roots"] = std::move(zero_roots);
    return with_cert(exact_contradiction(std::move(payload)));
  }
  if (qb != 0) {
    if ((square_target - qc) % qb == 0) {
      Vec w = line_point((square_target - qc) / qb);
      if (nonzero(w)) return with_witness(l, std::move(w), square_target);
    }
    return with_cert(exact_contradiction(Json{
        {"form", "linear_t"}, {"B", qb.str()}, {"C", qc.str()}, {"target", square_target.str()}}));
  }
  if (qc == square_target) {
    Vec w = nonzero(e0) ? e0 : k;  // k is nonzero and isotropic with <k,d> = 0
    if (nonzero(w) && square(l, w) == square_target && pairing(l, w, d) == pairing_target)
      return with_witness(l, std::move(w), square_target);
  }
  return with_cert(exact_contradiction(
      Json{{"form", "constant"}, {"C", qc.str()}, {"target", square_target.str()}}));
}

namespace {

bool fits_fast_path(const Lattice& l, const Int& n,
                    const std::optional<PairingConstraint>& constraint, long bound) {
  Int maxg = 0;
  for (int i = 0; i < l.rank; ++i)
    for (int j = 0; j < l.rank; ++j) maxg = std::max(maxg, abs(l.gram.at(i, j)));
  Int worst = maxg * l.rank * l.rank * Int(bound) * Int(bound);
  if (constraint) {
    Int maxd = 0;
    for (const Int& x : constraint->d) maxd = std::max(maxd, abs(x));
    worst = std::max(worst, maxg * maxd * l.rank * l.rank * Int(bound));
    if (abs(constraint->value) > worst) return false;
  }
  return worst < (Int(1) << 61) && abs(n) <= worst;
}

struct FastForm {
  std::vector<int64_t> gram;
  std::vector<int64_t> cdot;  // gram * constraint.d, when present
  int64_t n = 0, cval = 0;
  int rank = 0;
  bool has_constraint = false;
};

FastForm to_fast(const Lattice& l, const Int& n,
                 const std::optional<PairingConstraint>& constraint) {
  FastForm f;
  f.rank = l.rank;
  f.n = int64_t(n);
  f.gram.resize(size_t(l.rank) * l.rank);
  for (int i = 0; i < l.rank; ++i)
    for (int j = 0; j < l.rank; ++j) f.gram[size_t(i) * l.rank + j] = int64_t(l.gram.at(i, j));
  if (constraint) {
    f.has_constraint = true;
    f.cval = int64_t(constraint->value);
    Vec gd = l.gram * constraint->d;
    for (const Int& x : gd) f.cdot.push_back(int64_t(x));
  }
  return f;
}

// Scans the sub-box with the leading coordinate fixed; returns the first
// witness in enumeration order or nothing.
bool fast_scan_tail(const FastForm& f, std::vector<int64_t>& v, int pos, long bound) {
  if (pos == f.rank) {
    bool zero = true;
    for (int64_t x : v) zero = zero && x == 0;
    if (zero) return false;
    int64_t q = 0;
    for (int i = 0; i < f.rank; ++i) {
      int64_t row = 0;
      for (int j = 0; j < f.rank; ++j) row += f.gram[size_t(i) * f.rank + j] * v[j];
      q += v[i] * row;
    }
    if (q != f.n) return false;
    if (f.has_constraint) {
      int64_t c = 0;
      for (int i = 0; i < f.rank; ++i) c += f.cdot[i] * v[i];
      if (c != f.cval) return false;
    }
    return true;
  }
  for (long j = 0; j <= 2 * bound; ++j) {
    v[pos] = idx_val(j);
    if (fast_scan_tail(f, v, pos + 1, bound)) return true;
  }
  return false;
}

inline long idx_of(int64_t v) { return v > 0 ? long(2 * v - 1) : long(-2 * v); }

// Rank-2 specialization: incremental evaluation of the form along each row
// of the box, tracking the enumeration-order-least hit. Same result as the
// generic scan, ~10x faster.
std::optional<Vec> oracle_fast2(const FastForm& f, long bound, bool parallel) {
  const int64_t a = f.gram[0], b = f.gram[1], cc = f.gram[3];
  const int64_t px = f.has_constraint ? f.cdot[0] : 0;
  const int64_t py = f.has_constraint ? f.cdot[1] : 0;
  long best0 = std::numeric_limits<long>::max(), best1 = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (long xi = -bound; xi <= bound; ++xi) {
    const int64_t x = xi;
    int64_t y = -bound;
    int64_t q = a * x * x + 2 * b * x * y + cc * y * y;
    int64_t dq = 2 * b * x + cc * (2 * y + 1);  // q(x, y+1) - q(x, y)
    for (; y <= bound; ++y, q += dq, dq += 2 * cc) {
      if (q != f.n || (x == 0 && y == 0)) continue;
      if (f.has_constraint && px * x + py * y != f.cval) continue;
      long j0 = idx_of(x), j1 = idx_of(y);
#ifdef _OPENMP
#pragma omp critical(k3lat_oracle2)
#endif
      if (j0 < best0 || (j0 == best0 && j1 < best1)) { best0 = j0; best1 = j1; }
    }
  }
  if (best0 == std::numeric_limits<long>::max()) return std::nullopt;
  return Vec{idx_val(best0), idx_val(best1)};
}

std::optional<Vec> oracle_fast(const Lattice& l, const Int& n,
                               const std::optional<PairingConstraint>& constraint, long bound,
                               bool parallel) {
  FastForm f = to_fast(l, n, constraint);
  if (f.rank == 2) {
    std::optional<Vec> w = oracle_fast2(f, bound, parallel);
    if (w) verify_witness(l, *w, n);
    return w;
  }
  long outer = 2 * bound + 1;
  long best_j = outer;
  std::vector<int64_t> best;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
#endif
  for (long j = 0; j < outer; ++j) {
    bool skip;
#ifdef _OPENMP
#pragma omp critical(k3lat_oracle)
#endif
    skip = j > best_j;
    if (skip) continue;
    std::vector<int64_t> v(f.rank);
    v[0] = idx_val(j);
    if (fast_scan_tail(f, v, 1, bound)) {
#ifdef _OPENMP
#pragma omp critical(k3lat_oracle)
#endif
      if (j < best_j) { best_j = j; best = v; }
    }
  }
  if (best_j == outer) return std::nullopt;
  Vec w(best.begin(), best.end());
  verify_witness(l, w, n);
  return w;
}

std::optional<Vec> oracle_big(const Lattice& l, const Int& n,
                              const std::optional<PairingConstraint>& constraint, long bound) {
  std::vector<long> idx(l.rank, 0);
  Vec v(l.rank, 0);
  while (true) {
    bool zero = true;
    for (const Int& x : v) zero = zero && x == 0;
    if (!zero && square(l, v) == n &&
        (!constraint || pairing(l, v, constraint->d) == constraint->value))
      return v;
    int pos = l.rank - 1;
    while (pos >= 0) {
      if (++idx[pos] <= 2 * bound) { v[pos] = idx_val(idx[pos]); break; }
      idx[pos] = 0;
      v[pos] = 0;
      --pos;
    }
    if (pos < 0) return std::nullopt;
  }
}

}  // namespace

std::optional<Vec> brute_oracle_serial(const Lattice& l, const Int& n,
                                       const std::optional<PairingConstraint>& constraint,
                                       long bound) {
  if (bound < 1) throw ContractViolation("oracle bound must be positive");
  if (fits_fast_path(l, n, constraint, bound)) return oracle_fast(l, n, constraint, bound, false);
  return oracle_big(l, n, constraint, bound);
}

std::optional<Vec> brute_oracle(const Lattice& l, const Int& n,
                                const std::optional<PairingConstraint>& constraint, long bound) {
  if (bound < 1) throw ContractViolation("oracle bound must be positive");
  if (fits_fast_path(l, n, constraint, bound)) return oracle_fast(l, n, constraint, bound, true);
  return oracle_big(l, n, constraint, bound);
}

bool even_pairing_lattice(const Lattice& l) {
  for (int i = 0; i < l.rank; ++i)
    for (int j = 0; j < l.rank; ++j)
      if (l.gram.at(i, j) % 2 != 0) return false;
  return true;
}

}  // namespace k3lat
