// SPDX-License-Identifier: Apache-2.0
//
// polarlam command line: analysis, classification, deformation, stacking
// sequence search and polar-diagram data for anisotropic laminates.
//
// Exit codes: 0 success, 2 validation error, 3 singular laminate.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polarlam/io.hpp"
#include "polarlam/polarlam.hpp"

namespace {

using namespace polarlam;

constexpr const char* kCatalogEnvVar = "POLARLAM_MATERIALS";

MaterialCatalog build_catalog(const std::string& extra_path) {
  MaterialCatalog catalog = MaterialCatalog::with_builtins();
  if (const char* env = std::getenv(kCatalogEnvVar); env && *env)
    merge_catalog(catalog, load_json_file(env));
  if (!extra_path.empty()) merge_catalog(catalog, load_json_file(extra_path));
  return catalog;
}

std::string default_format(const std::string& requested) {
  if (!requested.empty()) return requested;
  return isatty(fileno(stdout)) ? "pretty" : "json";
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream f(out_path);
    if (!f) throw ValidationError("cannot write file: " + out_path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
  }
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

double clean(double x, double scale) { return std::fabs(x) < 1e-12 * scale ? 0.0 : x; }

void print_mat(std::ostream& os, const std::string& name, const KelvinMat& m,
               const std::string& unit, double sc) {
  const auto f = [&](double x) { return fmt(clean(x, sc)); };
  os << name << " [" << unit << "]\n";
  os << "  [" << f(m.m11) << ", " << f(m.m12) << ", " << f(m.m16) << "]\n";
  os << "  [" << f(m.m12) << ", " << f(m.m22) << ", " << f(m.m26) << "]\n";
  os << "  [" << f(m.m16) << ", " << f(m.m26) << ", " << f(m.m66) << "]\n";
}

void print_mat(std::ostream& os, const std::string& name, const KelvinMatAsym& m,
               const std::string& unit, double sc) {
  const auto f = [&](double x) { return fmt(clean(x, sc)); };
  os << name << " [" << unit << "]\n";
  os << "  [" << f(m.m11) << ", " << f(m.m12) << ", " << f(m.m16) << "]\n";
  os << "  [" << f(m.m21) << ", " << f(m.m22) << ", " << f(m.m26) << "]\n";
  os << "  [" << f(m.m61) << ", " << f(m.m62) << ", " << f(m.m66) << "]\n";
}

void print_vec(std::ostream& os, const std::string& name, const KelvinVec& v,
               const std::string& unit, double sc) {
  os << name << " [" << unit << "] = {" << fmt(clean(v.v1, sc)) << ", "
     << fmt(clean(v.v2, sc)) << ", " << fmt(clean(v.v6, sc)) << "}\n";
}

void print_polar4(std::ostream& os, const std::string& name, const PolarParams4& p,
                  double sc) {
  os << "  " << name << ": T0=" << fmt(clean(p.T0, sc)) << " T1=" << fmt(clean(p.T1, sc))
     << " R0=" << fmt(clean(p.R0, sc)) << " R1=" << fmt(clean(p.R1, sc));
  if (p.phi0_defined && p.R0 >= 1e-12 * sc)
    os << " Phi0=" << fmt(p.Phi0 * 180.0 / kPi) << "deg";
  if (p.phi1_defined && p.R1 >= 1e-12 * sc)
    os << " Phi1=" << fmt(p.Phi1 * 180.0 / kPi) << "deg";
  os << "\n";
}

void print_polar2(std::ostream& os, const std::string& name, const PolarParams2& p,
                  double sc) {
  os << "  " << name << ": T=" << fmt(clean(p.T, sc)) << " R=" << fmt(clean(p.R, sc));
  if (p.phi_defined && p.R >= 1e-12 * sc) os << " Phi=" << fmt(p.Phi * 180.0 / kPi) << "deg";
  os << "\n";
}

std::string pretty_report(const Laminate& lam, const StiffnessSet& s, const ComplianceSet& c,
                          const ClassificationReport& cls) {
  std::ostringstream os;
  os << "laminate: " << lam.name << "  (" << lam.plies.size() << " plies, h = "
     << fmt(total_thickness(lam)) << " mm)\n\n";
  const double s4 = s.A_polar.T0 + 2.0 * s.A_polar.T1;
  const double s2 = std::max(max_abs(s.U), max_abs(s.W));
  const double sc4 = std::max(max_abs(c.a), max_abs(c.d));
  const double scu = std::max(max_abs(c.u), max_abs(c.w));
  const double sv1 = 6.0 / s.h * scu;
  const double sv2 = 0.5 * s.h * scu;
  print_mat(os, "A", s.A, "MPa", s4);
  print_mat(os, "B", s.B, "MPa", s4);
  print_mat(os, "D", s.D, "MPa", s4);
  print_vec(os, "U", s.U, "MPa/degC", s2);
  print_vec(os, "V", s.V, "MPa/degC", s2);
  print_vec(os, "W", s.W, "MPa/degC", s2);
  os << "polar (stiffness)\n";
  print_polar4(os, "A", s.A_polar, s4);
  print_polar4(os, "B", s.B_polar, s4);
  print_polar4(os, "D", s.D_polar, s4);
  print_polar2(os, "U", s.U_polar, s2);
  print_polar2(os, "V", s.V_polar, s2);
  print_polar2(os, "W", s.W_polar, s2);
  os << "\n";
  print_mat(os, "a", c.a, "1/MPa", sc4);
  print_mat(os, "b", c.b, "1/MPa", sc4);
  print_mat(os, "d", c.d, "1/MPa", sc4);
  print_vec(os, "u", c.u, "1/degC", scu);
  print_vec(os, "v1", c.v1, "1/(degC mm)", sv1);
  print_vec(os, "v2", c.v2, "mm/degC", sv2);
  print_vec(os, "w", c.w, "1/degC", scu);
  os << "polar (compliance)\n";
  print_polar4(os, "a", c.a_polar, sc4);
  print_polar4(os, "d", c.d_polar, sc4);
  print_polar2(os, "u", c.u_polar, scu);
  print_polar2(os, "v1", c.v1_polar, sv1);
  print_polar2(os, "v2", c.v2_polar, sv2);
  print_polar2(os, "w", c.w_polar, scu);
  os << "\nclassification\n";
  os << "  A: " << to_string(cls.A_class) << "  B: " << to_string(cls.B_class)
     << "  D: " << to_string(cls.D_class) << "\n";
  os << "  U: " << to_string(cls.U_class) << "  V: " << to_string(cls.V_class)
     << "  W: " << to_string(cls.W_class) << "\n";
  os << "  elastically coupled:          " << (cls.elastically_coupled ? "yes" : "no") << "\n";
  os << "  thermally uncoupled:          " << (cls.thermally_uncoupled ? "yes" : "no") << "\n";
  os << "  quasi-homogeneous (C = O):    " << (cls.quasi_homogeneous ? "yes" : "no") << "\n";
  os << "  thermally quasi-homogeneous:  "
     << (cls.thermally_quasi_homogeneous ? "yes" : "no") << "\n";
  os << "  TQHCL:                        " << (cls.tqhcl ? "yes" : "no") << "\n";
  os << "  warp-free stable (v1 = O):    " << (cls.warp_free_stable ? "yes" : "no") << "\n";
  os << "  extension-free stable (v2=O): " << (cls.extension_free_stable ? "yes" : "no")
     << "\n";
  os << "  special case: " << to_string(cls.special_case)
     << (cls.k1_variant ? " (k = 1 branch)" : "") << "\n";
  return os.str();
}

int cmd_analyze(const std::string& file, const std::string& materials,
                const std::string& format, const std::string& out, double tol,
                bool with_verify) {
  const MaterialCatalog catalog = build_catalog(materials);
  const Laminate lam = load_laminate(file);
  const StiffnessSet s = stiffness_tensors(lam, catalog);
  const ComplianceSet c = invert(s);
  const ClassificationReport cls = classify(s, c, tol);
  if (format == "json") {
    json j = analyze_report(lam, catalog, tol);
    if (with_verify) {
      j["verification"] = {
          {"oracle_max_rel_dev", oracle_max_deviation(s, c)},
          {"thermal_form_rel_dev", thermal_form_deviation(s, c)},
          {"coupling_identity_rel_dev", coupling_identity_deviation(s, c)}};
    }
    write_output(j.dump(2), out);
  } else {
    std::string text = pretty_report(lam, s, c, cls);
    if (with_verify) {
      std::ostringstream os;
      os << text << "\nverification\n"
         << "  block formulas vs dense inverse: max rel dev = "
         << fmt(oracle_max_deviation(s, c)) << "\n"
         << "  thermal compliance, two printed forms: max rel dev = "
         << fmt(thermal_form_deviation(s, c)) << "\n"
         << "  v2-v1 coupling identity: rel dev = "
         << fmt(coupling_identity_deviation(s, c)) << "\n";
      text = os.str();
    }
    write_output(text, out);
  }
  return 0;
}

int cmd_classify(const std::string& file, const std::string& from_report,
                 const std::string& materials, const std::string& format,
                 const std::string& out, double tol) {
  StiffnessSet s;
  std::string name;
  if (!from_report.empty()) {
    const json rep = load_json_file(from_report);
    s = stiffness_from_report(rep);
    name = rep.value("laminate", json::object()).value("name", "report");
  } else {
    const MaterialCatalog catalog = build_catalog(materials);
    const Laminate lam = load_laminate(file);
    s = stiffness_tensors(lam, catalog);
    name = lam.name;
  }
  const ComplianceSet c = invert(s);
  const ClassificationReport cls = classify(s, c, tol);
  if (format == "json") {
    json j = classification_to_json(cls);
    j["name"] = name;
    write_output(j.dump(2), out);
  } else {
    std::ostringstream os;
    os << "laminate: " << name << "\n";
    os << "  special case: " << to_string(cls.special_case) << "\n";
    os << "  coupled=" << cls.elastically_coupled
       << " thermally_uncoupled=" << cls.thermally_uncoupled
       << " C=O:" << cls.quasi_homogeneous << " Y=O:" << cls.thermally_quasi_homogeneous
       << " TQHCL:" << cls.tqhcl << " warp_free:" << cls.warp_free_stable
       << " extension_free:" << cls.extension_free_stable << "\n";
    write_output(os.str(), out);
  }
  return 0;
}

KelvinVec parse_triple(const std::string& text, const std::string& what) {
  KelvinVec v;
  if (text.empty()) return v;
  if (std::sscanf(text.c_str(), "%lf,%lf,%lf", &v.v1, &v.v2, &v.v6) != 3)
    throw ValidationError(what + ": expected three comma-separated numbers");
  return v;
}

int cmd_deform(const std::string& file, const std::string& materials,
               const std::string& format, const std::string& out, double t, double grad_t,
               const std::string& N_text, const std::string& M_text,
               const std::string& plate, int grid, const std::string& height_field) {
  const MaterialCatalog catalog = build_catalog(materials);
  const Laminate lam = load_laminate(file);
  const StiffnessSet s = stiffness_tensors(lam, catalog);
  const ComplianceSet c = invert(s);
  const KelvinVec N = parse_triple(N_text, "--N");
  const KelvinVec M = parse_triple(M_text, "--M");
  const Response r = deform(s, c, N, M, {t, grad_t});

  if (!height_field.empty() || !plate.empty()) {
    double sx = 100.0, sy = 100.0;
    if (!plate.empty() &&
        std::sscanf(plate.c_str(), "%lfx%lf", &sx, &sy) != 2)
      throw ValidationError("--plate: expected WIDTHxHEIGHT in mm, e.g. 100x100");
    if (!height_field.empty()) {
      std::ofstream f(height_field);
      if (!f) throw ValidationError("cannot write file: " + height_field);
      f << "x_mm,y_mm,z_mm\n";
      char buf[96];
      for (const SurfacePoint& p : surface_sample(r, sx, sy, grid)) {
        std::snprintf(buf, sizeof buf, "%.9g,%.9g,%.9g\n", p.x, p.y, round_sig(p.z));
        f << buf;
      }
    }
  }

  if (format == "json") {
    json j{{"eps", detail::vec_json(r.eps, max_abs(r.eps))},
           {"kappa_per_mm", detail::vec_json(r.kappa, max_abs(r.kappa))},
           {"gaussian_curvature_per_mm2", round_sig(r.K_gauss)},
           {"mean_curvature_per_mm", round_sig(r.H_mean)},
           {"principal_curvatures_per_mm",
            {round_sig(r.kappa_I), round_sig(r.kappa_II)}}};
    write_output(j.dump(2), out);
  } else {
    std::ostringstream os;
    os << "load: t = " << fmt(t) << " degC, grad t = " << fmt(grad_t) << " degC/mm\n";
    print_vec(os, "eps", r.eps, "-", max_abs(r.eps));
    print_vec(os, "kappa", r.kappa, "1/mm", max_abs(r.kappa));
    os << "principal curvatures: " << fmt(r.kappa_I) << ", " << fmt(r.kappa_II)
       << " 1/mm\n";
    os << "mean curvature H = " << fmt(r.H_mean) << " 1/mm, Gaussian curvature K = "
       << fmt(r.K_gauss) << " 1/mm^2\n";
    write_output(os.str(), out);
  }
  return 0;
}

Predicate parse_predicate(const std::string& s) {
  if (s == "B_zero") return Predicate::BZero;
  if (s == "V_zero") return Predicate::VZero;
  if (s == "C_zero") return Predicate::CZero;
  if (s == "B_nonzero") return Predicate::BNonzero;
  if (s == "R1B_zero") return Predicate::R1BZero;
  if (s == "warp_free") return Predicate::WarpFree;
  if (s == "extension_free") return Predicate::ExtensionFree;
  if (s == "balanced_crossply" || s == "balanced") return Predicate::BalancedCrossPly;
  throw ValidationError("unknown predicate: " + s);
}

int cmd_search(int n, const std::vector<double>& orientations,
               const std::vector<std::string>& predicate_names, std::size_t max_results,
               const std::string& dedup, const std::string& material_name,
               const std::string& materials, double ply_thickness, bool verify_results,
               const std::string& out) {
  SearchSpec spec;
  spec.n = n;
  spec.orientation_deg = orientations;
  for (const std::string& p : predicate_names) spec.predicates.push_back(parse_predicate(p));
  spec.max_results = max_results;
  if (dedup == "none")
    spec.dedup = DedupPolicy::None;
  else if (dedup == "reversal")
    spec.dedup = DedupPolicy::Reversal;
  else if (dedup == "swap")
    spec.dedup = DedupPolicy::OrientationSwap;
  else if (dedup == "full")
    spec.dedup = DedupPolicy::Full;
  else
    throw ValidationError("unknown dedup policy: " + dedup);

  const MaterialCatalog catalog = build_catalog(materials);
  const PlyMaterial material = catalog.get(material_name);

  std::ostream* os = &std::cout;
  std::ofstream f;
  if (!out.empty()) {
    f.open(out);
    if (!f) throw ValidationError("cannot write file: " + out);
    os = &f;
  }
  std::size_t count = enumerate(spec, [&](const SearchResult& r) {
    json j{{"angles_deg", r.angles_deg}, {"exact", r.exact}};
    if (r.exact) {
      j["sums"] = {{"a2", {r.sums.a2_re, r.sums.a2_im}},
                   {"b2", {r.sums.b2_re, r.sums.b2_im}},
                   {"b4", {r.sums.b4_re, r.sums.b4_im}},
                   {"c2", {r.sums.c2_re, r.sums.c2_im}},
                   {"c4", {r.sums.c4_re, r.sums.c4_im}}};
    }
    if (verify_results) {
      const VerifyReport rep =
          verify_sequence(r.angles_deg, material, spec.predicates, ply_thickness);
      json checks = json::array();
      for (const PredicateCheck& ck : rep.checks)
        checks.push_back({{"predicate", to_string(ck.predicate)},
                          {"residual", ck.residual},
                          {"pass", ck.pass}});
      j["verification"] = {{"all_pass", rep.all_pass}, {"checks", checks}};
    }
    *os << j.dump() << "\n";
    return true;
  });
  std::cerr << "sequences found: " << count << "\n";
  return 0;
}

int cmd_polar_plot(const std::string& file, const std::string& materials,
                   const std::string& tensor, const std::string& component, double step,
                   const std::string& out) {
  const MaterialCatalog catalog = build_catalog(materials);
  const Laminate lam = load_laminate(file);
  const StiffnessSet s = stiffness_tensors(lam, catalog);
  const ComplianceSet c = invert(s);
  if (step <= 0.0) throw ValidationError("--step must be positive");

  const auto value_at = [&](double theta) -> double {
    const auto pick_sym = [&](const KelvinMat& m) -> double {
      if (component == "11") return m.m11;
      if (component == "12") return m.m12;
      if (component == "16") return m.m16;
      if (component == "22") return m.m22;
      if (component == "26") return m.m26;
      if (component == "66") return m.m66;
      throw ValidationError("unknown component for a symmetric tensor: " + component);
    };
    const auto pick_asym = [&](const KelvinMatAsym& m) -> double {
      if (component == "11") return m.m11;
      if (component == "12") return m.m12;
      if (component == "16") return m.m16;
      if (component == "21") return m.m21;
      if (component == "22") return m.m22;
      if (component == "26") return m.m26;
      if (component == "61") return m.m61;
      if (component == "62") return m.m62;
      if (component == "66") return m.m66;
      throw ValidationError("unknown component for the coupling compliance: " + component);
    };
    const auto pick_vec = [&](const KelvinVec& v) -> double {
      if (component == "1") return v.v1;
      if (component == "2") return v.v2;
      if (component == "6") return v.v6;
      throw ValidationError("unknown component for a 2nd-rank tensor: " + component);
    };
    if (tensor == "A") return pick_sym(cartesian_from_polar_4(s.A_polar, theta));
    if (tensor == "B") return pick_sym(cartesian_from_polar_4(s.B_polar, theta));
    if (tensor == "D") return pick_sym(cartesian_from_polar_4(s.D_polar, theta));
    if (tensor == "a") return pick_sym(cartesian_from_polar_4(c.a_polar, theta));
    if (tensor == "d") return pick_sym(cartesian_from_polar_4(c.d_polar, theta));
    if (tensor == "b") return pick_asym(cartesian_from_polar_B(c.b_polar, theta));
    if (tensor == "U") return pick_vec(cartesian_from_polar_2(s.U_polar, theta));
    if (tensor == "V") return pick_vec(cartesian_from_polar_2(s.V_polar, theta));
    if (tensor == "W") return pick_vec(cartesian_from_polar_2(s.W_polar, theta));
    if (tensor == "u") return pick_vec(cartesian_from_polar_2(c.u_polar, theta));
    if (tensor == "v1") return pick_vec(cartesian_from_polar_2(c.v1_polar, theta));
    if (tensor == "v2") return pick_vec(cartesian_from_polar_2(c.v2_polar, theta));
    if (tensor == "w") return pick_vec(cartesian_from_polar_2(c.w_polar, theta));
    throw ValidationError("unknown tensor: " + tensor);
  };

  std::ostringstream os;
  os << "theta_deg,value\n";
  char buf[64];
  for (double deg = 0.0; deg < 360.0 - 1e-9; deg += step) {
    std::snprintf(buf, sizeof buf, "%.9g,%.9g\n", deg,
                  round_sig(value_at(deg * kPi / 180.0)));
    os << buf;
  }
  write_output(os.str(), out);
  return 0;
}

int cmd_verify(const std::string& file, const std::string& materials) {
  const MaterialCatalog catalog = build_catalog(materials);
  const Laminate lam = load_laminate(file);
  const StiffnessSet s = stiffness_tensors(lam, catalog);
  const StiffnessSet sp = polar_homogenize(lam, catalog);
  const ComplianceSet c = invert(s);
  const double route_dev =
      std::max({max_abs(s.A - sp.A), max_abs(s.B - sp.B), max_abs(s.D - sp.D)}) /
      (s.A_polar.T0 + 2.0 * s.A_polar.T1);
  std::printf("homogenization routes (Cartesian vs polar): max rel dev = %.3e\n", route_dev);
  std::printf("block formulas vs dense inverse:            max rel dev = %.3e\n",
              oracle_max_deviation(s, c));
  std::printf("thermal compliance, two printed forms:      max rel dev = %.3e\n",
              thermal_form_deviation(s, c));
  std::printf("v2-v1 coupling identity:                    rel dev     = %.3e\n",
              coupling_identity_deviation(s, c));
  std::printf("coupling block factorization:               rel dev     = %.3e\n",
              coupling_block_identity_deviation(s, c));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polar-method analysis of thermoelastically coupled laminates"};
  app.require_subcommand(1);

  std::string file, materials, format, out;
  double tol = 1e-6;

  auto add_common = [&](CLI::App* cmd, bool needs_file = true) {
    if (needs_file) cmd->add_option("file", file, "laminate JSON file")->required();
    cmd->add_option("--materials", materials, "extra material catalog (JSON)");
    cmd->add_option("--format", format, "output format: json|pretty")
        ->check(CLI::IsMember({"json", "pretty"}));
    cmd->add_option("-o,--output", out, "write output to file");
    cmd->add_option("--tol", tol, "classification tolerance (relative)");
  };

  auto* analyze = app.add_subcommand("analyze", "full tensor report");
  bool with_verify = false;
  add_common(analyze);
  analyze->add_flag("--verify", with_verify, "add dense-inverse verification lines");

  auto* classify_cmd = app.add_subcommand("classify", "classification report");
  std::string from_report;
  classify_cmd->add_option("file", file, "laminate JSON file");
  classify_cmd->add_option("--from-report", from_report, "re-ingest an analyze report");
  classify_cmd->add_option("--materials", materials, "extra material catalog (JSON)");
  classify_cmd->add_option("--format", format, "output format: json|pretty")
      ->check(CLI::IsMember({"json", "pretty"}));
  classify_cmd->add_option("-o,--output", out, "write output to file");
  classify_cmd->add_option("--tol", tol, "classification tolerance (relative)");

  auto* deform_cmd = app.add_subcommand("deform", "response to mechanical/thermal loads");
  double t = 0.0, grad_t = 0.0;
  std::string N_text, M_text, plate, height_field;
  int grid = 41;
  add_common(deform_cmd);
  deform_cmd->add_option("--t", t, "uniform temperature change (degC)");
  deform_cmd->add_option("--grad-t", grad_t, "through-thickness gradient (degC/mm)");
  deform_cmd->add_option("--N", N_text, "membrane actions N1,N2,N6 (MPa mm)");
  deform_cmd->add_option("--M", M_text, "bending actions M1,M2,M6 (MPa mm^2)");
  deform_cmd->add_option("--plate", plate, "plate size WxH in mm (default 100x100)");
  deform_cmd->add_option("--grid", grid, "height-field grid points per side");
  deform_cmd->add_option("--height-field", height_field, "write z(x,y) CSV here");

  auto* search_cmd = app.add_subcommand("search", "enumerate stacking sequences");
  int n = 0;
  std::vector<double> orientations;
  std::vector<std::string> predicate_names;
  std::size_t max_results = std::numeric_limits<std::size_t>::max();
  std::string dedup = "none", material_name = "T300/5208";
  double ply_thickness = 0.125;
  bool verify_results = false;
  search_cmd->add_option("--n", n, "ply count")->required();
  search_cmd->add_option("--orientations", orientations, "orientation set (degrees)")
      ->required()
      ->delimiter(',');
  search_cmd->add_option("--predicates", predicate_names,
                         "B_zero,V_zero,C_zero,B_nonzero,R1B_zero,warp_free,"
                         "extension_free,balanced_crossply")
      ->delimiter(',');
  search_cmd->add_option("--max-results", max_results, "stop after this many");
  search_cmd->add_option("--dedup", dedup, "none|reversal|swap|full");
  search_cmd->add_option("--material", material_name, "material for verification");
  search_cmd->add_option("--materials", materials, "extra material catalog (JSON)");
  search_cmd->add_option("--ply-thickness", ply_thickness, "ply thickness (mm)");
  search_cmd->add_flag("--verify-results", verify_results,
                       "re-verify each result through the tensor pipeline");
  search_cmd->add_option("-o,--output", out, "write JSON lines to file");

  auto* plot = app.add_subcommand("polar-plot", "directional diagram of one component");
  std::string tensor = "A", component = "11";
  double step = 1.0;
  add_common(plot);
  plot->add_option("--tensor", tensor, "A|B|D|U|V|W|a|b|d|u|v1|v2|w")->required();
  plot->add_option("--component", component, "11|12|16|22|26|66 (4th), 1|2|6 (2nd)")
      ->required();
  plot->add_option("--step", step, "theta step in degrees");

  auto* verify_cmd = app.add_subcommand("verify", "independent-route verification");
  verify_cmd->add_option("file", file, "laminate JSON file")->required();
  verify_cmd->add_option("--materials", materials, "extra material catalog (JSON)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const std::string f = default_format(format);
    if (analyze->parsed()) return cmd_analyze(file, materials, f, out, tol, with_verify);
    if (classify_cmd->parsed()) {
      if (file.empty() && from_report.empty())
        throw ValidationError("classify: need a laminate file or --from-report");
      return cmd_classify(file, from_report, materials, f, out, tol);
    }
    if (deform_cmd->parsed())
      return cmd_deform(file, materials, f, out, t, grad_t, N_text, M_text, plate, grid,
                        height_field);
    if (search_cmd->parsed())
      return cmd_search(n, orientations, predicate_names, max_results, dedup, material_name,
                        materials, ply_thickness, verify_results, out);
    if (plot->parsed()) return cmd_polar_plot(file, materials, tensor, component, step, out);
    if (verify_cmd->parsed()) return cmd_verify(file, materials);
  } catch (const SingularBlockError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DenominatorVanishesError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
