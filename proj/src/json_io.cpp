#include "k3lat/json_io.hpp"

namespace k3lat {

namespace {

Int int_from_json(const Json& j) {
  if (j.is_string()) return Int(j.get<std::string>());
  if (j.is_number_integer()) return Int(j.get<long long>());
  throw ContractViolation("expected an integer or decimal string");
}

}  // namespace

Json vec_json(const Vec& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(x.str());
  return a;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) throw ContractViolation("vector must be a JSON array");
  Vec v;
  for (const Json& x : j) v.push_back(int_from_json(x));
  return v;
}

Json mat_json(const Mat& m) {
  Json a = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int jj = 0; jj < m.cols(); ++jj) row.push_back(m.at(i, jj).str());
    a.push_back(std::move(row));
  }
  return a;
}

Mat mat_from_json(const Json& j) {
  if (!j.is_array()) throw ContractViolation("matrix must be a JSON array of arrays");
  int rows = int(j.size());
  int cols = rows == 0 ? 0 : int(j.at(0).size());
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (int(j.at(i).size()) != cols) throw ContractViolation("ragged matrix rows");
    for (int c = 0; c < cols; ++c) m.at(i, c) = int_from_json(j.at(i).at(c));
  }
  return m;
}

Json lattice_json(const Lattice& l) {
  Json j;
  j["rank"] = l.rank;
  j["gram"] = mat_json(l.gram);
  if (!l.label.empty()) j["label"] = l.label;
  if (!l.basis_names.empty()) j["basis_names"] = l.basis_names;
  j["det"] = l.det.str();
  j["even"] = l.even;
  return j;
}

Lattice lattice_from_json(const Json& j) {
  if (j.is_array()) return make_lattice(mat_from_json(j));
  std::string label = j.value("label", "");
  std::vector<std::string> names;
  if (j.contains("basis_names"))
    names = j.at("basis_names").get<std::vector<std::string>>();
  return make_lattice(mat_from_json(j.at("gram")), label, names);
}

Json isometry_json(const Isometry& g) {
  Json j;
  j["matrix"] = mat_json(g.matrix);
  j["ambient"] = g.ambient.label.empty() ? lattice_json(g.ambient) : Json(g.ambient.label);
  return j;
}

Json pell_solution_json(const PellSolution& s) {
  return Json{{"x", s.x.str()}, {"y", s.y.str()}};
}

Json pell_outcome_json(const PellOutcome& o) {
  Json j;
  j["D"] = o.d.str();
  j["N"] = o.n.str();
  j["solvable"] = o.solvable;
  if (o.solvable) {
    Json sols = Json::array();
    for (const PellSolution& s : o.solutions) sols.push_back(pell_solution_json(s));
    j["solutions"] = std::move(sols);
  } else if (o.certificate) {
    j["certificate"] = o.certificate->to_json();
  }
  return j;
}

Json decision_json(const RepresentationDecision& d) {
  Json j;
  if (d.has_witness()) {
    j["kind"] = "witness";
    j["witness"] = vec_json(*d.witness);
  } else {
    j["kind"] = "empty";
    if (d.certificate) j["certificate"] = d.certificate->to_json();
  }
  return j;
}

Json disc_group_json(const DiscriminantGroup& g) {
  Json f = Json::array();
  for (const Int& d : g.invariant_factors) f.push_back(d.str());
  return Json{{"invariant_factors", std::move(f)},
              {"length", g.length()},
              {"order", g.order().str()}};
}

Json admissibility_json(const AdmissibilityReport& r) {
  Json j;
  j["t"] = r.t.str();
  j["is_square"] = r.is_square;
  if (r.neg_pell) j["neg_pell"] = pell_solution_json(*r.neg_pell);
  if (r.p4t5) j["p4t5"] = pell_outcome_json(*r.p4t5);
  j["admissible"] = r.admissible;
  if (r.involution_class) {
    j["involution_class"] = vec_json(*r.involution_class);
    j["involution_square"] = r.involution_square->str();
  }
  return j;
}

Json battery_json(const SaintDonatBattery& b) {
  Json j;
  j["lattice"] = lattice_json(b.lattice);
  j["d"] = vec_json(b.d);
  j["hyperelliptic"] = decision_json(b.hyperelliptic);
  j["free_pencil"] = decision_json(b.free_pencil);
  j["contracted"] = decision_json(b.contracted);
  j["line"] = decision_json(b.line);
  j["minus_two_classes"] = decision_json(b.minus_two_classes);
  j["paper_inference"] = b.paper_inference;
  return j;
}

Json double_beauville_json(const DoubleBeauvilleReport& r) {
  Json j;
  j["alpha"] = r.alpha.str();
  j["lattice"] = lattice_json(r.lattice);
  j["kappa"] = isometry_json(r.kappa);
  j["fixed_class"] = vec_json(r.fixed_class);
  j["fixed_class_named"] = class_in_basis(r.lattice, r.fixed_class);
  j["fixed_square"] = r.fixed_square.str();
  j["is_beauville_form"] = r.is_beauville_form;
  return j;
}

Json nodal_json(const NodalReport& r) {
  Json j;
  j["k"] = r.k;
  j["lattice"] = lattice_json(r.lattice);
  j["square4_class"] = vec_json(r.square4_class);
  j["square4"] = r.square4.str();
  j["even_pairings"] = r.even_pairings;
  j["discriminant_group"] = disc_group_json(r.disc);
  j["morrison_embeddable"] = r.morrison;
  j["transcendental_obstruction"] =
      r.obstruction == Obstruction::Impossible ? "impossible" : "consistent";
  return j;
}

Json verify_json(const VerifyReport& r) {
  Json claims = Json::array();
  for (const ClaimResult& c : r.claims) {
    Json rec;
    rec["claim_id"] = c.id;
    rec["status"] = c.pass ? "pass" : "fail";
    for (auto& [k, v] : c.detail.items()) rec[k] = v;
    claims.push_back(std::move(rec));
  }
  return Json{{"all_pass", r.all_pass}, {"claims", std::move(claims)}};
}

std::string class_in_basis(const Lattice& l, const Vec& v) {
  std::string out;
  for (int i = 0; i < l.rank; ++i) {
    const Int& c = v[size_t(i)];
    if (c == 0) continue;
    Int a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (a != 1) out += a.str() + "\xc2\xb7";  // middle dot
    out += l.name_of(i);
  }
  if (out.empty()) out = "0";
  return out;
}

}  // namespace k3lat
