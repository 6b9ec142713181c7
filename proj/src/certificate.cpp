#include "k3lat/certificate.hpp"

#include <utility>
#include <vector>

#include "k3lat/pell.hpp"

namespace k3lat {

std::string cert_kind_name(CertKind k) {
  switch (k) {
    case CertKind::ModularObstruction: return "modular_obstruction";
    case CertKind::ConvergentExhaustion: return "convergent_exhaustion";
    case CertKind::SquareParameter: return "square_parameter";
    case CertKind::ClassExhaustion: return "class_exhaustion";
    case CertKind::ExactContradiction: return "exact_contradiction";
    case CertKind::NonSquareDiscriminant: return "nonsquare_discriminant";
  }
  throw ContractViolation("unknown certificate kind");
}

Json Certificate::to_json() const {
  Json j;
  j["kind"] = cert_kind_name(kind);
  for (auto& [k, v] : payload.items()) j[k] = v;
  return j;
}

namespace {

Int jint(const Json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.get<long long>());
  throw ContractViolation("expected decimal integer string in certificate payload");
}

// Congruence scan for a full binary form a x^2 + 2b xy + c y^2 = N (mod m).
bool form_congruence_solvable(const Int& a, const Int& b, const Int& c, const Int& n, const Int& m) {
  long mm = long(m);
  long aa = long(mod_pos(a, m)), bb = long(mod_pos(b, m)), cc = long(mod_pos(c, m));
  long nn = long(mod_pos(n, m));
  for (long x = 0; x < mm; ++x)
    for (long y = 0; y < mm; ++y)
      if ((aa * x % mm * x + 2 * bb * x % mm * y + cc * y % mm * y) % mm == nn) return true;
  return false;
}

bool check_modular(const Json& doc) {
  Int m = jint(doc.at("modulus"));
  if (m < 2) return false;
  const Json& eq = doc.at("equation");
  std::string type = eq.at("type").get<std::string>();
  if (type == "pell")
    return !pell_congruence_solvable(jint(eq.at("D")), jint(eq.at("N")), m);
  if (type == "binary_form")
    return !form_congruence_solvable(jint(eq.at("a")), jint(eq.at("b")), jint(eq.at("c")),
                                     jint(eq.at("N")), m);
  return false;
}

bool check_convergent(const Json& doc) {
  Int d = jint(doc.at("D")), n = jint(doc.at("N"));
  if (d < 2 || is_perfect_square(d)) return false;
  if (n == 0 || n * n >= d) return false;  // criterion only applies below sqrt(D)
  return convergent_scan_finds_nothing(d, n);
}

// Re-runs the bounded enumeration behind a definite-form Empty verdict:
// a*N = X^2 - disc*y^2 with disc < 0 and X congruent to b*y mod a.
bool check_definite_box(const Json& doc) {
  Int a = jint(doc.at("a")), b = jint(doc.at("b")), c = jint(doc.at("c")), n = jint(doc.at("N"));
  Int disc = b * b - a * c;
  if (disc >= 0 || a == 0) return false;
  Int m = a * n;
  if (m < 0) return true;  // definite sign mismatch, nothing to scan
  Int ybound = isqrt(m / (-disc));
  for (Int y = 0; y <= ybound; ++y) {
    Int xx = m + disc * y * y;
    if (xx < 0 || !is_perfect_square(xx)) continue;
    Int x = isqrt(xx);
    for (const Int& xs : {x, -x})
      for (const Int& ys : {y, -y})
        if ((xs - b * ys) % a == 0) return false;  // a witness exists after all
  }
  return true;
}

// Re-runs the divisor-pair scan behind a split-form (square discriminant)
// Empty verdict.
bool check_factor_pairs(const Json& doc) {
  Int a = jint(doc.at("a")), b = jint(doc.at("b")), c = jint(doc.at("c")), n = jint(doc.at("N"));
  Int disc = b * b - a * c;
  if (disc <= 0 || !is_perfect_square(disc) || a == 0 || n == 0) return false;
  Int s = isqrt(disc);
  Int m = a * n;
  for (Int d1 = 1; d1 <= abs(m); ++d1) {
    if (m % d1 != 0) continue;
    for (const Int& u : {d1, -d1}) {
      Int v = m / u;
      if ((u + v) % 2 != 0 || (v - u) % (2 * s) != 0) continue;
      Int x = (u + v) / 2, y = (v - u) / (2 * s);
      if ((x - b * y) % a == 0) return false;
    }
  }
  return true;
}

// Re-runs the unit-orbit congruence filter: the solutions of
// X^2 - D y^2 = M are closed under signs and the fundamental-unit action;
// the orbit of residues mod |a| is purely periodic, so one cycle per
// starting state decides whether any solution meets X = b*y (mod a).
bool check_unit_orbit(const Json& doc) {
  Int a = jint(doc.at("a")), b = jint(doc.at("b"));
  Int d = jint(doc.at("D")), m = jint(doc.at("M"));
  Int u = jint(doc.at("u")), v = jint(doc.at("v"));
  if (u * u - d * v * v != 1 || v <= 0) return false;
  Int aa = abs(a);
  if (aa == 0) return false;
  for (const Json& rep : doc.at("representatives")) {
    Int x = jint(rep.at(0)), y = jint(rep.at(1));
    if (x * x - d * y * y != m) return false;
    for (int sx = -1; sx <= 1; sx += 2)
      for (int sy = -1; sy <= 1; sy += 2) {
        Int x0 = mod_pos(sx * x, aa), y0 = mod_pos(sy * y, aa);
        Int xc = x0, yc = y0;
        do {
          if (mod_pos(xc - b * yc, aa) == 0) return false;  // witness exists
          Int xn = mod_pos(u * xc + v * d * yc, aa);
          Int yn = mod_pos(v * xc + u * yc, aa);
          xc = xn; yc = yn;
        } while (!(xc == x0 && yc == y0));
      }
  }
  // completeness of the representative list itself rests on the class search
  return true;
}

bool check_class_exhaustion(const Json& doc) {
  std::string method = doc.value("method", "pqa_square_classes");
  if (method == "pqa_square_classes")
    return !genpell_has_solution(jint(doc.at("D")), jint(doc.at("N")));
  if (method == "definite_box") return check_definite_box(doc);
  if (method == "factor_pairs") return check_factor_pairs(doc);
  if (method == "unit_orbit_congruence") return check_unit_orbit(doc);
  return false;
}

bool check_exact_contradiction(const Json& doc) {
  std::string form = doc.at("form").get<std::string>();
  if (form == "quadratic") {
    Int a = jint(doc.at("A")), b = jint(doc.at("B")), c = jint(doc.at("C"));
    Int target = jint(doc.at("target"));
    std::vector<Int> excluded;
    if (doc.contains("zero_vector_roots"))
      for (const Json& t : doc.at("zero_vector_roots")) excluded.push_back(jint(t));
    if (a == 0) return false;
    Int disc = b * b - 4 * a * (c - target);
    if (disc < 0 || !is_perfect_square(disc)) return true;
    Int r = isqrt(disc);
    for (const Int& num : {-b + r, -b - r}) {
      if (num % (2 * a) != 0) continue;
      Int t = num / (2 * a);
      bool ok = false;
      for (const Int& e : excluded) ok = ok || (e == t);
      if (!ok) return false;  // a genuine integer solution exists
    }
    return true;
  }
  if (form == "linear") {
    Int p = jint(doc.at("p")), q = jint(doc.at("q")), b = jint(doc.at("b"));
    Int g = gcd(p, q);
    return g != 0 && b % g != 0;
  }
  if (form == "linear_t") {
    Int b = jint(doc.at("B")), c = jint(doc.at("C")), target = jint(doc.at("target"));
    return b != 0 && (target - c) % b != 0;
  }
  if (form == "constant") {
    return jint(doc.at("C")) != jint(doc.at("target"));
  }
  if (form == "definite_sign") {
    Int a = jint(doc.at("a")), disc = jint(doc.at("disc")), n = jint(doc.at("N"));
    return disc < 0 && sign_of(a) * sign_of(n) < 0;
  }
  if (form == "divisibility") {
    Int divisor = jint(doc.at("divisor")), n = jint(doc.at("N"));
    return divisor != 0 && n % divisor != 0;
  }
  if (form == "rank1") {
    Int a = jint(doc.at("a")), n = jint(doc.at("N"));
    if (n == 0) return a != 0;  // only the zero vector is isotropic
    if (a == 0 || n % a != 0) return true;
    return !is_perfect_square(n / a);
  }
  return false;
}

bool check_nonsquare_disc(const Json& doc) {
  Int disc = jint(doc.at("disc"));
  if (doc.contains("gram")) {
    const Json& g = doc.at("gram");
    Int a = jint(g.at(0).at(0)), b = jint(g.at(0).at(1)), c = jint(g.at(1).at(1));
    if (jint(g.at(1).at(0)) != b) return false;
    if (b * b - a * c != disc) return false;
  }
  return !is_perfect_square(disc);
}

}  // namespace

bool check_certificate(const Json& doc) {
  try {
    std::string kind = doc.at("kind").get<std::string>();
    if (kind == "modular_obstruction") return check_modular(doc);
    if (kind == "convergent_exhaustion") return check_convergent(doc);
    if (kind == "square_parameter") return is_perfect_square(jint(doc.at("D")));
    if (kind == "class_exhaustion") return check_class_exhaustion(doc);
    if (kind == "exact_contradiction") return check_exact_contradiction(doc);
    if (kind == "nonsquare_discriminant") return check_nonsquare_disc(doc);
    return false;
  } catch (const nlohmann::json::exception&) {
    return false;
  } catch (const ContractViolation&) {
    return false;
  }
}

}  // namespace k3lat
