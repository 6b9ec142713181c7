#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "k3lat/json_io.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace k3lat;

namespace {

// Inline JSON, @file.json, or "-" for stdin.
Json load_json_arg(const std::string& arg) {
  if (arg == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return Json::parse(ss.str());
  }
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream f(arg.substr(1));
    if (!f) throw ContractViolation("cannot open file: " + arg.substr(1));
    return Json::parse(f);
  }
  return Json::parse(arg);
}

Lattice lattice_arg(const std::string& gram) { return lattice_from_json(load_json_arg(gram)); }

long oracle_bound_env() {
  if (const char* s = std::getenv("K3LAT_ORACLE_BOUND")) {
    long b = std::atol(s);
    if (b < 1) throw ContractViolation("K3LAT_ORACLE_BOUND must be a positive integer");
    return b;
  }
  return 1000;
}

struct Report {
  Json doc;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  bool json_mode = false;

  explicit Report(const std::string& command) {
    doc["schema_version"] = 1;
    doc["command"] = command;
    doc["inputs"] = Json::object();
  }

  void emit() {
    if (!json_mode) return;
    doc["timing_ms"] = long(std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - t0)
                                .count());
    std::cout << doc.dump(2) << "\n";
  }
};

void print_decision(const Lattice& l, const char* name, const RepresentationDecision& d) {
  std::cout << name << ": ";
  if (d.has_witness())
    std::cout << "witness " << class_in_basis(l, *d.witness) << "\n";
  else
    std::cout << "empty (" << cert_kind_name(d.certificate->kind) << ")\n";
}

void print_battery(const SaintDonatBattery& b) {
  print_decision(b.lattice, "hyperelliptic (E^2=0, E.d=2)", b.hyperelliptic);
  print_decision(b.lattice, "free pencil   (E^2=0, E.d=1)", b.free_pencil);
  print_decision(b.lattice, "contracted    (C^2=-2, C.d=0)", b.contracted);
  print_decision(b.lattice, "line          (C^2=-2, C.d=1)", b.line);
  print_decision(b.lattice, "(-2)-classes  (unconstrained)", b.minus_two_classes);
}

// Ambient <2t> + <-2> with display names h, delta.
Lattice bcns_ambient(const Int& t) {
  return make_lattice(Mat{{2 * t, 0}, {0, -2}}, "<2t> + <-2>", {"h", "\xce\xb4"});
}

void print_admissibility(const AdmissibilityReport& r) {
  std::cout << "t = " << r.t.str() << ": ";
  if (r.is_square) {
    std::cout << "not admissible (perfect square)\n";
    return;
  }
  if (!r.admissible) {
    std::cout << "not admissible (";
    if (!r.neg_pell)
      std::cout << "x^2 - t y^2 = -1 unsolvable";
    else
      std::cout << "x^2 - 4t y^2 = 5 solvable";
    std::cout << ")\n";
    return;
  }
  std::cout << "admissible, D = " << class_in_basis(bcns_ambient(r.t), *r.involution_class)
            << " with q(D) = " << r.involution_square->str() << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"exact lattice / Pell / representation toolkit"};
  app.require_subcommand(1);
  int exit_code = 0;

  // --- pell ---
  auto* pell_cmd = app.add_subcommand("pell", "minimal solution of x^2 - D y^2 = +-1");
  std::string pell_d;
  int pell_n = -1;
  bool pell_json = false;
  pell_cmd->add_option("-D", pell_d, "D (decimal)")->required();
  pell_cmd->add_option("-N", pell_n, "+1 or -1");
  pell_cmd->add_flag("--json", pell_json);
  pell_cmd->callback([&] {
    Report rep("pell");
    rep.json_mode = pell_json;
    rep.doc["inputs"] = Json{{"D", pell_d}, {"N", pell_n}};
    auto s = pell_min(Int(pell_d), pell_n);
    Json res{{"exists", s.has_value()}};
    if (s) res["solution"] = pell_solution_json(*s);
    rep.doc["result"] = res;
    if (!pell_json) {
      if (s)
        std::cout << "minimal solution: (" << s->x.str() << ", " << s->y.str() << ")\n";
      else
        std::cout << "no solution (continued-fraction period is even)\n";
    }
    rep.emit();
  });

  // --- genpell ---
  auto* gp_cmd = app.add_subcommand("genpell", "solve x^2 - D y^2 = N");
  std::string gp_d, gp_n;
  bool gp_json = false;
  gp_cmd->add_option("-D", gp_d)->required();
  gp_cmd->add_option("-N", gp_n)->required();
  gp_cmd->add_flag("--json", gp_json);
  gp_cmd->callback([&] {
    Report rep("genpell");
    rep.json_mode = gp_json;
    rep.doc["inputs"] = Json{{"D", gp_d}, {"N", gp_n}};
    PellOutcome out = genpell(Int(gp_d), Int(gp_n));
    rep.doc["result"] = pell_outcome_json(out);
    if (!gp_json) {
      if (out.solvable) {
        std::cout << "solvable; class representatives:\n";
        for (const PellSolution& s : out.solutions)
          std::cout << "  (" << s.x.str() << ", " << s.y.str() << ")\n";
      } else {
        std::cout << "unsolvable; certificate: " << out.certificate->to_json().dump() << "\n";
      }
    }
    rep.emit();
  });

  // --- represent ---
  auto* rp_cmd = app.add_subcommand("represent", "does the form represent N?");
  std::string rp_gram, rp_n, rp_pair_d, rp_pair_v;
  bool rp_json = false;
  rp_cmd->add_option("--gram", rp_gram, "Gram matrix (inline JSON or @file)")->required();
  rp_cmd->add_option("-N", rp_n, "target square")->required();
  rp_cmd->add_option("--pair-with", rp_pair_d, "constraint vector d (JSON)");
  rp_cmd->add_option("--pair-value", rp_pair_v, "required value of <v, d>");
  rp_cmd->add_flag("--json", rp_json);
  rp_cmd->callback([&] {
    Report rep("represent");
    rep.json_mode = rp_json;
    rep.doc["inputs"] = Json{{"gram", rp_gram}, {"N", rp_n}};
    Lattice l = lattice_arg(rp_gram);
    RepresentationDecision dec;
    if (!rp_pair_d.empty()) {
      if (rp_pair_v.empty()) throw ContractViolation("--pair-with requires --pair-value");
      rep.doc["inputs"]["pair_with"] = rp_pair_d;
      rep.doc["inputs"]["pair_value"] = rp_pair_v;
      dec = constrained_class(l, vec_from_json(load_json_arg(rp_pair_d)), Int(rp_n), Int(rp_pair_v));
    } else {
      dec = represents(l, Int(rp_n));
    }
    rep.doc["result"] = decision_json(dec);
    if (!rp_json) print_decision(l, "decision", dec);
    rep.emit();
  });

  // --- reflect ---
  auto* rf_cmd = app.add_subcommand("reflect", "reflection isometry in a class");
  std::string rf_gram, rf_class;
  bool rf_neg = false, rf_json = false;
  rf_cmd->add_option("--gram", rf_gram)->required();
  rf_cmd->add_option("--class", rf_class, "class D (JSON vector)")->required();
  rf_cmd->add_flag("--neg", rf_neg, "hyperplane reflection (needs D^2 = -2)");
  rf_cmd->add_flag("--json", rf_json);
  rf_cmd->callback([&] {
    Report rep("reflect");
    rep.json_mode = rf_json;
    rep.doc["inputs"] = Json{{"gram", rf_gram}, {"class", rf_class}, {"neg", rf_neg}};
    Lattice l = lattice_arg(rf_gram);
    Vec d = vec_from_json(load_json_arg(rf_class));
    Isometry g = rf_neg ? reflection_neg(l, d) : reflection_fix(l, d);
    rep.doc["result"] = isometry_json(g);
    if (!rf_json) {
      std::cout << "reflection in " << class_in_basis(l, d) << ":\n";
      for (int i = 0; i < l.rank; ++i) {
        Vec e(size_t(l.rank), 0), img(size_t(l.rank));
        e[size_t(i)] = 1;
        for (int r = 0; r < l.rank; ++r) img[size_t(r)] = g.matrix.at(r, i);
        std::cout << "  " << l.name_of(i) << " -> " << class_in_basis(l, img) << "\n";
      }
    }
    rep.emit();
  });

  // --- compose ---
  auto* cp_cmd = app.add_subcommand("compose", "compose isometries (matrix product)");
  std::string cp_gram;
  std::vector<std::string> cp_mats;
  bool cp_json = false;
  cp_cmd->add_option("--gram", cp_gram)->required();
  cp_cmd->add_option("matrices", cp_mats, "isometry matrices, applied right-to-left")
      ->expected(-2)
      ->allow_extra_args(false);  // keep bracketed JSON arguments intact
  cp_cmd->add_flag("--json", cp_json);
  cp_cmd->callback([&] {
    Report rep("compose");
    rep.json_mode = cp_json;
    rep.doc["inputs"] = Json{{"gram", cp_gram}, {"matrices", cp_mats}};
    Lattice l = lattice_arg(cp_gram);
    Isometry acc = make_isometry(l, mat_from_json(load_json_arg(cp_mats[0])));
    for (size_t i = 1; i < cp_mats.size(); ++i)
      acc = compose(acc, make_isometry(l, mat_from_json(load_json_arg(cp_mats[i]))));
    rep.doc["result"] = isometry_json(acc);
    rep.doc["result"]["involution"] = is_involution(acc);
    if (!cp_json)
      std::cout << "product matrix: " << mat_json(acc.matrix).dump()
                << (is_involution(acc) ? " (involution)" : "") << "\n";
    rep.emit();
  });

  // --- bcns ---
  auto* bc_cmd = app.add_subcommand("bcns", "admissibility of a polarization degree 2t");
  std::string bc_t;
  bool bc_json = false;
  bc_cmd->add_option("-t", bc_t)->required();
  bc_cmd->add_flag("--json", bc_json);
  bc_cmd->callback([&] {
    Report rep("bcns");
    rep.json_mode = bc_json;
    rep.doc["inputs"] = Json{{"t", bc_t}};
    AdmissibilityReport r = bcns_admissible(Int(bc_t));
    rep.doc["result"] = admissibility_json(r);
    if (!bc_json) print_admissibility(r);
    rep.emit();
  });

  // --- bcns-scan ---
  auto* bs_cmd = app.add_subcommand("bcns-scan", "admissibility reports for a range of t");
  std::string bs_lo, bs_hi;
  int bs_jobs = 0;
  bool bs_json = false;
  bs_cmd->add_option("lo", bs_lo)->required();
  bs_cmd->add_option("hi", bs_hi)->required();
  bs_cmd->add_option("--jobs", bs_jobs, "worker threads (default: all cores)");
  bs_cmd->add_flag("--json", bs_json);
  bs_cmd->callback([&] {
    Report rep("bcns-scan");
    rep.json_mode = bs_json;
    rep.doc["inputs"] = Json{{"lo", bs_lo}, {"hi", bs_hi}};
#ifdef _OPENMP
    if (bs_jobs > 0) omp_set_num_threads(bs_jobs);
#endif
    std::vector<AdmissibilityReport> rs = bcns_scan(Int(bs_lo), Int(bs_hi));
    Json arr = Json::array();
    long count = 0;
    for (const AdmissibilityReport& r : rs) {
      arr.push_back(admissibility_json(r));
      if (r.admissible) ++count;
    }
    rep.doc["result"] = Json{{"reports", std::move(arr)}, {"admissible_count", count}};
    if (!bs_json) {
      std::cout << "admissible t in [" << bs_lo << ", " << bs_hi << "]:";
      for (const AdmissibilityReport& r : rs)
        if (r.admissible) std::cout << " " << r.t.str();
      std::cout << "\n(" << count << " of " << rs.size() << ")\n";
    }
    rep.emit();
  });

  // --- double-beauville ---
  auto* db_cmd = app.add_subcommand("double-beauville", "composite involution s1 s2 s1");
  std::string db_alpha;
  bool db_json = false;
  db_cmd->add_option("--alpha", db_alpha)->required();
  db_cmd->add_flag("--json", db_json);
  db_cmd->callback([&] {
    Report rep("double-beauville");
    rep.json_mode = db_json;
    rep.doc["inputs"] = Json{{"alpha", db_alpha}};
    DoubleBeauvilleReport r = double_beauville(Int(db_alpha));
    rep.doc["result"] = double_beauville_json(r);
    if (!db_json) {
      std::cout << "basis: h1, h2, \xce\xb4 in " << r.lattice.label << "\n";
      std::cout << "fixed class D = " << class_in_basis(r.lattice, r.fixed_class)
                << ", q(D) = " << r.fixed_square.str() << "\n";
      std::cout << "beauville form: " << (r.is_beauville_form ? "yes" : "no") << "\n";
    }
    rep.emit();
  });

  // --- nodal ---
  auto* nd_cmd = app.add_subcommand("nodal", "k-node lattice R_k checks");
  int nd_k = 1;
  bool nd_json = false;
  nd_cmd->add_option("-k", nd_k)->required();
  nd_cmd->add_flag("--json", nd_json);
  nd_cmd->callback([&] {
    Report rep("nodal");
    rep.json_mode = nd_json;
    rep.doc["inputs"] = Json{{"k", nd_k}};
    NodalReport r = nodal_verify(nd_k);
    Json res = nodal_json(r);
    // an impossible obstruction is the expected verdict for k > 10
    res["status"] = r.obstruction == Obstruction::Impossible ? "fail-expected" : "pass";
    rep.doc["result"] = res;
    if (!nd_json) {
      std::cout << "R_" << nd_k << ": q(H - sum e_i) = " << r.square4.str()
                << ", even pairings: " << (r.even_pairings ? "yes" : "no")
                << ", discriminant length " << r.disc.length() << "\n";
      std::cout << "transcendental_obstruction: "
                << (r.obstruction == Obstruction::Impossible ? "impossible" : "consistent")
                << "\n";
    }
    rep.emit();
  });

  // --- one-node ---
  auto* on_cmd = app.add_subcommand("one-node", "battery for <6> + <-2>, d = H - e");
  bool on_json = false;
  on_cmd->add_flag("--json", on_json);
  on_cmd->callback([&] {
    Report rep("one-node");
    rep.json_mode = on_json;
    Lattice ns = make_lattice(Mat{{6, 0}, {0, -2}}, "<6> + <-2>", {"H", "\xce\xb5"});
    Vec d{1, -1};
    SaintDonatBattery b = saint_donat_battery(ns, d);
    Json res = battery_json(b);
    res["q_d"] = square(ns, d).str();
    rep.doc["result"] = res;
    if (!on_json) {
      std::cout << "d = " << class_in_basis(ns, d) << ", q(d) = " << square(ns, d).str() << "\n";
      print_battery(b);
    }
    rep.emit();
  });

  // --- verify-paper ---
  auto* vp_cmd = app.add_subcommand("verify-paper", "run the full claim battery");
  bool vp_json = false;
  vp_cmd->add_flag("--json", vp_json);
  vp_cmd->callback([&] {
    Report rep("verify-paper");
    rep.json_mode = vp_json;
    VerifyOptions opts;
    opts.oracle_bound = oracle_bound_env();
    rep.doc["inputs"] = Json{{"oracle_bound", opts.oracle_bound}};
    VerifyReport r = verify_paper(opts);
    Json res = verify_json(r);
    rep.doc["results"] = res["claims"];
    rep.doc["all_pass"] = r.all_pass;
    if (!vp_json) {
      for (const ClaimResult& c : r.claims) {
        std::cout << c.id << ": " << (c.pass ? "pass" : "fail");
        if (!c.pass) std::cout << "  " << c.detail.dump();
        std::cout << "\n";
      }
      std::cout << (r.all_pass ? "all claims pass" : "FAILURES PRESENT") << "\n";
    }
    rep.emit();
    if (!r.all_pass) exit_code = 1;
  });

  // --- check-cert ---
  auto* cc_cmd = app.add_subcommand("check-cert", "re-verify a certificate");
  std::string cc_arg;
  bool cc_json = false;
  cc_cmd->add_option("certificate", cc_arg, "inline JSON, @file, or - for stdin")->required();
  cc_cmd->add_flag("--json", cc_json);
  cc_cmd->callback([&] {
    Report rep("check-cert");
    rep.json_mode = cc_json;
    Json doc = load_json_arg(cc_arg);
    bool ok = check_certificate(doc);
    rep.doc["result"] = Json{{"valid", ok}};
    if (!cc_json) std::cout << (ok ? "valid" : "INVALID") << "\n";
    rep.emit();
    if (!ok) exit_code = 1;
  });

  // --- disc-group ---
  auto* dg_cmd = app.add_subcommand("disc-group", "discriminant group of a lattice");
  std::string dg_gram;
  bool dg_json = false;
  dg_cmd->add_option("--gram", dg_gram)->required();
  dg_cmd->add_flag("--json", dg_json);
  dg_cmd->callback([&] {
    Report rep("disc-group");
    rep.json_mode = dg_json;
    rep.doc["inputs"] = Json{{"gram", dg_gram}};
    Lattice l = lattice_arg(dg_gram);
    DiscriminantGroup g = discriminant_group(l);
    rep.doc["result"] = disc_group_json(g);
    if (!dg_json) {
      std::cout << "invariant factors:";
      for (const Int& d : g.invariant_factors) std::cout << " " << d.str();
      std::cout << "\nlength " << g.length() << ", order " << g.order().str() << "\n";
    }
    rep.emit();
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ContractViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
