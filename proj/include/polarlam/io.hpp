// SPDX-License-Identifier: Apache-2.0
#pragma once

// File formats and report serialization.  Units are fixed at the I/O
// boundary: MPa, mm, degC, degrees.  Angles are radians inside the library.
//
// Material catalog: JSON array of records
//   {"name": ..., "E1_MPa": ..., "E2_MPa": ..., "G12_MPa": ..., "nu12": ...,
//    "alpha1_perC": ..., "alpha2_perC": ...}
// Laminate file, identical plies:
//   {"name": ..., "material": ..., "ply_thickness_mm": ..., "angles_deg": [...]}
// or the hybrid form:
//   {"name": ..., "ply_thickness_mm": ..., "plies": [{"material": ..., "angle_deg": ...}]}

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "polarlam/classification.hpp"
#include "polarlam/compliance.hpp"
#include "polarlam/laminate.hpp"
#include "polarlam/material.hpp"

namespace polarlam {

using json = nlohmann::json;

/// Round to `digits` significant decimal digits; keeps JSON output stable.
inline double round_sig(double x, int digits = 9) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  const double mag = std::pow(10.0, digits - 1 - static_cast<int>(std::floor(
                                                     std::log10(std::fabs(x)))));
  return std::round(x * mag) / mag;
}

inline json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open file: " + path);
  json j;
  try {
    f >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError("parse error in " + path + ": " + e.what());
  }
  return j;
}

inline PlyMaterial material_from_json(const json& j) {
  PlyMaterial m;
  try {
    m.name = j.at("name").get<std::string>();
    m.E1 = j.at("E1_MPa").get<double>();
    m.E2 = j.at("E2_MPa").get<double>();
    m.G12 = j.at("G12_MPa").get<double>();
    m.nu12 = j.at("nu12").get<double>();
    m.alpha1 = j.at("alpha1_perC").get<double>();
    m.alpha2 = j.at("alpha2_perC").get<double>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad material record: ") + e.what());
  }
  validate(m);
  return m;
}

inline json material_to_json(const PlyMaterial& m) {
  return json{{"name", m.name},        {"E1_MPa", m.E1},
              {"E2_MPa", m.E2},        {"G12_MPa", m.G12},
              {"nu12", m.nu12},        {"alpha1_perC", m.alpha1},
              {"alpha2_perC", m.alpha2}};
}

inline void merge_catalog(MaterialCatalog& catalog, const json& j) {
  if (!j.is_array()) throw ValidationError("material catalog must be a JSON array");
  for (const auto& rec : j) catalog.add(material_from_json(rec));
}

inline MaterialCatalog load_catalog(const std::string& path) {
  MaterialCatalog catalog = MaterialCatalog::with_builtins();
  merge_catalog(catalog, load_json_file(path));
  return catalog;
}

inline Laminate laminate_from_json(const json& j) {
  Laminate lam;
  try {
    lam.name = j.value("name", "laminate");
    lam.ply_thickness = j.value("ply_thickness_mm", 0.125);
    if (j.contains("angles_deg")) {
      const std::string material = j.at("material").get<std::string>();
      for (const auto& a : j.at("angles_deg"))
        lam.plies.push_back({material, a.get<double>() * kPi / 180.0});
    } else if (j.contains("plies")) {
      for (const auto& p : j.at("plies"))
        lam.plies.push_back({p.at("material").get<std::string>(),
                             p.at("angle_deg").get<double>() * kPi / 180.0});
    } else {
      throw ValidationError("laminate file needs 'angles_deg' or 'plies'");
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad laminate file: ") + e.what());
  }
  validate(lam);
  return lam;
}

inline Laminate load_laminate(const std::string& path) {
  return laminate_from_json(load_json_file(path));
}

namespace detail {

/// Display cleaning: components below 1e-12 of the tensor family's scale are
/// summation roundoff and print as zero.  Genuine small couplings from
/// integer coefficient sums sit many orders above this threshold.
inline double clean(double x, double scale) {
  return std::fabs(x) < 1e-12 * scale ? 0.0 : round_sig(x);
}

inline json vec_json(const KelvinVec& v, double scale) {
  return json{clean(v.v1, scale), clean(v.v2, scale), clean(v.v6, scale)};
}

inline json mat_json(const KelvinMat& m, double scale) {
  return json{{clean(m.m11, scale), clean(m.m12, scale), clean(m.m16, scale)},
              {clean(m.m12, scale), clean(m.m22, scale), clean(m.m26, scale)},
              {clean(m.m16, scale), clean(m.m26, scale), clean(m.m66, scale)}};
}

inline json mat_json(const KelvinMatAsym& m, double scale) {
  return json{{clean(m.m11, scale), clean(m.m12, scale), clean(m.m16, scale)},
              {clean(m.m21, scale), clean(m.m22, scale), clean(m.m26, scale)},
              {clean(m.m61, scale), clean(m.m62, scale), clean(m.m66, scale)}};
}

inline json polar_json(const PolarParams4& p, double scale) {
  json j{{"T0", clean(p.T0, scale)},
         {"T1", clean(p.T1, scale)},
         {"R0", clean(p.R0, scale)},
         {"R1", clean(p.R1, scale)},
         {"Phi0_deg", round_sig(p.Phi0 * 180.0 / kPi)},
         {"Phi1_deg", round_sig(p.Phi1 * 180.0 / kPi)}};
  if (!p.phi0_defined || p.R0 < 1e-12 * scale) j["Phi0_undefined"] = true;
  if (!p.phi1_defined || p.R1 < 1e-12 * scale) j["Phi1_undefined"] = true;
  return j;
}

inline json polar_json(const PolarParams2& p, double scale) {
  json j{{"T", clean(p.T, scale)}, {"R", clean(p.R, scale)},
         {"Phi_deg", round_sig(p.Phi * 180.0 / kPi)}};
  if (!p.phi_defined || p.R < 1e-12 * scale) j["Phi_undefined"] = true;
  return j;
}

inline json polar_json(const PolarParamsB9& p, double scale) {
  json j{{"t0", clean(p.t0, scale)},
         {"t1", clean(p.t1, scale)},
         {"t3", clean(p.t3, scale)},
         {"r0", clean(p.r0, scale)},
         {"r1", clean(p.r1, scale)},
         {"r2", clean(p.r2, scale)},
         {"phi0_deg", round_sig(p.phi0 * 180.0 / kPi)},
         {"phi1_deg", round_sig(p.phi1 * 180.0 / kPi)},
         {"phi2_deg", round_sig(p.phi2 * 180.0 / kPi)}};
  return j;
}

}  // namespace detail

inline json classification_to_json(const ClassificationReport& r) {
  json cases = json::array();
  for (SpecialCase c : r.satisfied_cases) cases.push_back(to_string(c));
  return json{{"A_symmetry", to_string(r.A_class)},
              {"B_symmetry", to_string(r.B_class)},
              {"D_symmetry", to_string(r.D_class)},
              {"U_symmetry", to_string(r.U_class)},
              {"V_symmetry", to_string(r.V_class)},
              {"W_symmetry", to_string(r.W_class)},
              {"elastically_coupled", r.elastically_coupled},
              {"thermally_uncoupled", r.thermally_uncoupled},
              {"quasi_homogeneous", r.quasi_homogeneous},
              {"thermally_quasi_homogeneous", r.thermally_quasi_homogeneous},
              {"tqhcl", r.tqhcl},
              {"warp_free_stable", r.warp_free_stable},
              {"extension_free_stable", r.extension_free_stable},
              {"special_case", to_string(r.special_case)},
              {"satisfied_cases", cases},
              {"k1_variant", r.k1_variant},
              {"tolerance", r.tolerance}};
}

/// Full analysis report: stiffness and compliance sets, Cartesian + polar,
/// homogeneity tensors, classification.  Re-ingestable via
/// stiffness_from_report.
inline json analyze_report(const Laminate& lam, const MaterialCatalog& catalog,
                           double tol = 1e-6) {
  const StiffnessSet s = stiffness_tensors(lam, catalog);
  const ComplianceSet c = invert(s);
  const HomogeneityPair hp = homogeneity_tensors(s);
  const ClassificationReport cls = classify(s, c, tol);

  json j;
  j["laminate"] = {{"name", lam.name},
                   {"ply_count", lam.plies.size()},
                   {"ply_thickness_mm", lam.ply_thickness},
                   {"thickness_mm", total_thickness(lam)},
                   {"hybrid", is_hybrid(lam)}};
  json plies = json::array();
  for (const Ply& p : lam.plies)
    plies.push_back({{"material", p.material},
                     {"angle_deg", round_sig(p.angle * 180.0 / kPi)}});
  j["laminate"]["plies"] = plies;

  const double s4 = s.A_polar.T0 + 2.0 * s.A_polar.T1;
  const double s2 = std::max(max_abs(s.U), max_abs(s.W));
  const double sc4 = std::max(max_abs(c.a), max_abs(c.d));
  const double scu = std::max(max_abs(c.u), max_abs(c.w));
  const double sv1 = 6.0 / s.h * scu;
  const double sv2 = 0.5 * s.h * scu;
  j["stiffness"] = {{"A_MPa", detail::mat_json(s.A, s4)},
                    {"B_MPa", detail::mat_json(s.B, s4)},
                    {"D_MPa", detail::mat_json(s.D, s4)},
                    {"U_MPa_perC", detail::vec_json(s.U, s2)},
                    {"V_MPa_perC", detail::vec_json(s.V, s2)},
                    {"W_MPa_perC", detail::vec_json(s.W, s2)},
                    {"polar",
                     {{"A", detail::polar_json(s.A_polar, s4)},
                      {"B", detail::polar_json(s.B_polar, s4)},
                      {"D", detail::polar_json(s.D_polar, s4)},
                      {"U", detail::polar_json(s.U_polar, s2)},
                      {"V", detail::polar_json(s.V_polar, s2)},
                      {"W", detail::polar_json(s.W_polar, s2)}}}};
  j["homogeneity"] = {{"C_MPa", detail::mat_json(hp.C, s4)},
                      {"Y_MPa_perC", detail::vec_json(hp.Y, s2)}};
  j["compliance"] = {{"a_perMPa", detail::mat_json(c.a, sc4)},
                     {"b_perMPa", detail::mat_json(c.b, sc4)},
                     {"d_perMPa", detail::mat_json(c.d, sc4)},
                     {"u_perC", detail::vec_json(c.u, scu)},
                     {"v1_perC_mm", detail::vec_json(c.v1, sv1)},
                     {"v2_mm_perC", detail::vec_json(c.v2, sv2)},
                     {"w_perC", detail::vec_json(c.w, scu)},
                     {"polar",
                      {{"a", detail::polar_json(c.a_polar, sc4)},
                       {"b", detail::polar_json(c.b_polar, sc4)},
                       {"d", detail::polar_json(c.d_polar, sc4)},
                       {"u", detail::polar_json(c.u_polar, scu)},
                       {"v1", detail::polar_json(c.v1_polar, sv1)},
                       {"v2", detail::polar_json(c.v2_polar, sv2)},
                       {"w", detail::polar_json(c.w_polar, scu)}}}};
  j["classification"] = classification_to_json(cls);
  return j;
}

namespace detail {

inline KelvinMat mat_from_json(const json& j) {
  KelvinMat m;
  m.m11 = j.at(0).at(0).get<double>();
  m.m12 = j.at(0).at(1).get<double>();
  m.m16 = j.at(0).at(2).get<double>();
  m.m22 = j.at(1).at(1).get<double>();
  m.m26 = j.at(1).at(2).get<double>();
  m.m66 = j.at(2).at(2).get<double>();
  return m;
}

inline KelvinVec vec_from_json(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()};
}

}  // namespace detail

/// Rebuilds the stiffness set from an analyze report (the Cartesian tensors
/// are authoritative; polar forms are re-derived).
inline StiffnessSet stiffness_from_report(const json& report) {
  StiffnessSet s;
  try {
    const json& st = report.at("stiffness");
    s.A = detail::mat_from_json(st.at("A_MPa"));
    s.B = detail::mat_from_json(st.at("B_MPa"));
    s.D = detail::mat_from_json(st.at("D_MPa"));
    s.U = detail::vec_from_json(st.at("U_MPa_perC"));
    s.V = detail::vec_from_json(st.at("V_MPa_perC"));
    s.W = detail::vec_from_json(st.at("W_MPa_perC"));
    s.h = report.at("laminate").at("thickness_mm").get<double>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad report file: ") + e.what());
  }
  s.A_polar = polar_from_cartesian_4(s.A);
  s.B_polar = polar_from_cartesian_4(s.B);
  s.D_polar = polar_from_cartesian_4(s.D);
  s.U_polar = polar_from_cartesian_2(s.U);
  s.V_polar = polar_from_cartesian_2(s.V);
  s.W_polar = polar_from_cartesian_2(s.W);
  return s;
}

}  // namespace polarlam
