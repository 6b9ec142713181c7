#include "k3lat/pell.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace k3lat {

namespace {

void require_pell_d(const Int& d) {
  if (d < 2) throw ContractViolation("Pell parameter D must be >= 2");
  if (is_perfect_square(d)) throw SquareParameter("Pell parameter D = " + d.str() + " is a perfect square");
}

void verify_solution(const Int& d, const Int& n, const PellSolution& s) {
  if (s.x * s.x - d * s.y * s.y != n)
    throw ContractViolation("internal error: Pell solution failed exact re-verification");
}

}  // namespace

CFExpansion cf_sqrt(const Int& d) {
  require_pell_d(d);
  Int a0 = isqrt(d);
  CFExpansion cf{d, a0, {}};
  Int p = a0, q = d - a0 * a0;  // state after the integer part
  while (true) {
    Int a = (a0 + p) / q;
    cf.period.push_back(a);
    // within the period every quotient is < 2*a0; equality marks its end
    if (a == 2 * a0) break;
    p = a * q - p;
    q = (d - p * p) / q;
  }
  return cf;
}

namespace {

// k-th partial quotient of sqrt(D), k >= 0.
Int quotient_at(const CFExpansion& cf, size_t k) {
  if (k == 0) return cf.a0;
  return cf.period[(k - 1) % cf.period.size()];
}

}  // namespace

std::optional<PellSolution> pell_min(const Int& d, int n) {
  if (n != 1 && n != -1) throw ContractViolation("pell_min solves only N = +1 or -1");
  CFExpansion cf = cf_sqrt(d);
  size_t ell = cf.period.size();
  size_t stop;  // index of the closing convergent, 0-based over quotients
  if (n == -1) {
    if (ell % 2 == 0) return std::nullopt;
    stop = ell - 1;
  } else {
    stop = (ell % 2 == 0) ? ell - 1 : 2 * ell - 1;
  }
  Int am2 = 0, am1 = 1, bm2 = 1, bm1 = 0;
  for (size_t k = 0; k <= stop; ++k) {
    Int a = quotient_at(cf, k);
    Int ak = a * am1 + am2, bk = a * bm1 + bm2;
    am2 = am1; am1 = ak; bm2 = bm1; bm1 = bk;
  }
  PellSolution s{am1, bm1};
  verify_solution(d, n, s);
  return s;
}

PellSolution unit_apply(const Int& d, const PellSolution& unit, const PellSolution& s) {
  return PellSolution{unit.x * s.x + unit.y * d * s.y, unit.y * s.x + unit.x * s.y};
}

namespace {

// Exact floor((p + sqrt(D)) / q) with s = floor(sqrt(D)), q != 0.
Int floor_p_sqrt_q(const Int& p, const Int& q, const Int& s) {
  Int a = p + s;
  if (q > 0) return floor_div(a, q);
  Int f = floor_div(a, q);
  if (a % q == 0) f -= 1;  // (a + theta)/q just below the integer a/q
  return f;
}

// Primitive class representatives of x^2 - D y^2 = m via the PQa recurrence
// started at each square root z of D modulo |m|. Complete: every class of
// primitive solutions determines such a z, and the representative shows up
// within the periodic part of the recurrence.
std::vector<PellSolution> pqa_primitive(const Int& d, const Int& m) {
  std::vector<PellSolution> out;
  Int am = abs(m);
  Int s = isqrt(d);
  std::optional<PellSolution> neg_unit = pell_min(d, -1);

  for (Int z = -(am / 2) + ((am % 2 == 0) ? 1 : 0); z <= am / 2; ++z) {
    if (mod_pos(z * z - d, am) != 0) continue;
    Int p = z, q = am;
    Int gm2 = -p, gm1 = q;   // G_{-2} = -P0, G_{-1} = Q0
    Int bm2 = 1, bm1 = 0;    // B_{-2} = 1,  B_{-1} = 0
    std::set<std::pair<Int, Int>> seen;
    int wraps = 0;
    for (int i = 0; wraps < 2 && i < 100000; ++i) {
      Int a = floor_p_sqrt_q(p, q, s);
      Int g = a * gm1 + gm2, b = a * bm1 + bm2;
      gm2 = gm1; gm1 = g; bm2 = bm1; bm1 = b;
      p = a * q - p;
      q = (d - p * p) / q;
      Int value = g * g - d * b * b;
      if (value == m) out.push_back(PellSolution{abs(g), abs(b)});
      else if (value == -m && neg_unit) {
        PellSolution t = unit_apply(d, *neg_unit, PellSolution{g, b});
        out.push_back(PellSolution{abs(t.x), abs(t.y)});
      }
      if (!seen.insert({p, q}).second) ++wraps, seen.clear(), seen.insert({p, q});
    }
  }
  return out;
}

Certificate modular_certificate(const Int& d, const Int& n, const Int& m) {
  Certificate c;
  c.kind = CertKind::ModularObstruction;
  c.payload = Json{{"modulus", m.str()},
                   {"equation", Json{{"type", "pell"}, {"D", d.str()}, {"N", n.str()}}}};
  return c;
}

}  // namespace

// Independent unsolvability re-check through the classical convergent
// criterion, valid when N^2 < D: every primitive positive solution is a
// convergent of sqrt(D), and convergent values repeat after two periods.
bool convergent_scan_finds_nothing(const Int& d, const Int& n) {
  CFExpansion cf = cf_sqrt(d);
  for (Int f = 1; f * f <= abs(n); ++f) {
    if (n % (f * f) != 0) continue;
    Int m = n / (f * f);
    if (m == 1) return false;  // (1,0) solves it
    if (m < 0 && (-m) % d == 0 && is_perfect_square((-m) / d)) return false;
    Int am2 = 0, am1 = 1, bm2 = 1, bm1 = 0;
    size_t steps = 2 * cf.period.size() + 1;
    for (size_t k = 0; k < steps; ++k) {
      Int a = quotient_at(cf, k);
      Int ak = a * am1 + am2, bk = a * bm1 + bm2;
      am2 = am1; am1 = ak; bm2 = bm1; bm1 = bk;
      if (ak * ak - d * bk * bk == m) return false;
    }
  }
  return true;
}

const std::vector<Int>& default_moduli() {
  static const std::vector<Int> moduli = [] {
    std::vector<Int> v{4, 8, 16};
    std::vector<int> primes;
    for (int p = 2; p <= 100; ++p) {
      bool is_p = p > 1;
      for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) { is_p = false; break; }
      if (is_p) primes.push_back(p);
    }
    for (int p : primes) v.push_back(p);
    for (int p : primes)
      if (p * p != 4) v.push_back(p * p);
    return v;
  }();
  return moduli;
}

bool pell_congruence_solvable(const Int& d, const Int& n, const Int& m) {
  if (m < 2) throw ContractViolation("modulus must be >= 2");
  long mm = long(m);
  long dd = long(mod_pos(d, m)), nn = long(mod_pos(n, m));
  std::vector<bool> sq(mm, false);
  for (long x = 0; x < mm; ++x) sq[(x * x) % mm] = true;
  for (long r = 0; r < mm; ++r) {
    if (!sq[r]) continue;  // r = y^2 mod m
    if (sq[(nn + dd * r) % mm]) return true;
  }
  return false;
}

std::optional<Int> mod_obstruction(const Int& d, const Int& n, const std::vector<Int>& moduli) {
  for (const Int& m : moduli)
    if (!pell_congruence_solvable(d, n, m)) return m;
  return std::nullopt;
}

namespace {

std::vector<PellSolution> class_representatives(const Int& d, const Int& n) {
  std::vector<PellSolution> reps;
  for (Int f = 1; f * f <= abs(n); ++f) {
    if (n % (f * f) != 0) continue;
    Int m = n / (f * f);
    if (m == 1) {
      reps.push_back(PellSolution{f, 0});
      continue;
    }
    if (m == -1) {
      if (auto nu = pell_min(d, -1)) reps.push_back(PellSolution{f * nu->x, f * nu->y});
      continue;
    }
    if (m < 0 && (-m) % d == 0 && is_perfect_square((-m) / d))
      reps.push_back(PellSolution{0, f * isqrt((-m) / d)});
    for (const PellSolution& s : pqa_primitive(d, m))
      reps.push_back(PellSolution{f * s.x, f * s.y});
  }
  // dedupe, keep deterministic order
  std::sort(reps.begin(), reps.end(), [](const PellSolution& a, const PellSolution& b) {
    return std::tie(a.y, a.x) < std::tie(b.y, b.x);
  });
  reps.erase(std::unique(reps.begin(), reps.end(),
                         [](const PellSolution& a, const PellSolution& b) {
                           return a.x == b.x && a.y == b.y;
                         }),
             reps.end());
  for (const PellSolution& s : reps) verify_solution(d, n, s);
  return reps;
}

}  // namespace

bool genpell_has_solution(const Int& d, const Int& n) {
  require_pell_d(d);
  if (n == 0) throw ContractViolation("genpell requires N != 0");
  return !class_representatives(d, n).empty();
}

PellOutcome genpell(const Int& d, const Int& n) {
  require_pell_d(d);
  if (n == 0) throw ContractViolation("genpell requires N != 0");
  PellOutcome out;
  out.d = d;
  out.n = n;

  std::vector<PellSolution> reps = class_representatives(d, n);
  if (!reps.empty()) {
    out.solvable = true;
    out.solutions = std::move(reps);
    return out;
  }

  out.solvable = false;
  if (auto m = mod_obstruction(d, n)) {
    out.certificate = modular_certificate(d, n, *m);
  } else if (n * n < d && convergent_scan_finds_nothing(d, n)) {
    Certificate c;
    c.kind = CertKind::ConvergentExhaustion;
    c.payload = Json{{"D", d.str()}, {"N", n.str()}, {"periods_scanned", 2}};
    out.certificate = c;
  } else {
    Certificate c;
    c.kind = CertKind::ClassExhaustion;
    c.payload = Json{{"D", d.str()},
                     {"N", n.str()},
                     {"method", "pqa_square_classes"}};
    out.certificate = c;
  }
  if (!check_certificate(*out.certificate))
    throw ContractViolation("internal error: emitted certificate failed re-verification");
  return out;
}

}  // namespace k3lat
