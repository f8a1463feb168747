// SPDX-License-Identifier: Apache-2.0
#pragma once

// Laminate-level classification: coupling flags, quasi-homogeneity, thermal
// stability classes, and closed-form polar expressions for the thermal
// compliances of coupled laminates whose tensors are orthotropic and share
// axes.  The closed forms take SIGNED anisotropy moduli expressed in the
// common frame: a modulus enters negative when its phase sits on the
// quarter-turn-shifted branch of the orthotropy grid, which also covers the
// k = 1 variants of each case.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "polarlam/compliance.hpp"

namespace polarlam {

/// Invariant angle offsets of a stiffness set: Phi_X = Phi0 - Phi1 per
/// tensor and the shift angles of A and D relative to B.
struct ShiftAngles {
  double PhiA = 0.0, PhiB = 0.0, PhiD = 0.0;
  double deltaA = 0.0, deltaD = 0.0;
  bool PhiA_defined = false, PhiB_defined = false, PhiD_defined = false;
  bool deltaA_defined = false, deltaD_defined = false;
};

inline ShiftAngles shift_angles(const StiffnessSet& s) {
  ShiftAngles sa;
  sa.PhiA_defined = s.A_polar.phi0_defined && s.A_polar.phi1_defined;
  sa.PhiB_defined = s.B_polar.phi0_defined && s.B_polar.phi1_defined;
  sa.PhiD_defined = s.D_polar.phi0_defined && s.D_polar.phi1_defined;
  if (sa.PhiA_defined) sa.PhiA = detail::wrap_angle(s.A_polar.Phi0 - s.A_polar.Phi1, 0.5 * kPi);
  if (sa.PhiB_defined) sa.PhiB = detail::wrap_angle(s.B_polar.Phi0 - s.B_polar.Phi1, 0.5 * kPi);
  if (sa.PhiD_defined) sa.PhiD = detail::wrap_angle(s.D_polar.Phi0 - s.D_polar.Phi1, 0.5 * kPi);
  // When the reference angle of B is undefined the conventional alignment
  // (shared axis) takes over; the defined flags record the convention.
  double ref = 0.0;
  if (s.B_polar.phi1_defined)
    ref = s.B_polar.Phi1;
  else if (s.A_polar.phi1_defined)
    ref = s.A_polar.Phi1;
  else if (s.D_polar.phi1_defined)
    ref = s.D_polar.Phi1;
  sa.deltaA_defined = s.A_polar.phi1_defined && s.B_polar.phi1_defined;
  sa.deltaD_defined = s.D_polar.phi1_defined && s.B_polar.phi1_defined;
  if (s.A_polar.phi1_defined) sa.deltaA = detail::wrap_angle(s.A_polar.Phi1 - ref, kPi);
  if (s.D_polar.phi1_defined) sa.deltaD = detail::wrap_angle(s.D_polar.Phi1 - ref, kPi);
  return sa;
}

/// For identical plies each thermal stiffness tensor is aligned with, or a
/// quarter turn from, its elastic partner.  Residuals are angular distances
/// to the nearest half-turn grid point, reported only where both angles are
/// conditioned (moduli above min_modulus * scale).
struct AngleRelationResiduals {
  double U = 0.0, V = 0.0, W = 0.0;
  bool U_checked = false, V_checked = false, W_checked = false;
  int lambda = 0;  // best-fit quarter-turn offset, 0 or 1
};

inline AngleRelationResiduals angle_relation_residuals(const StiffnessSet& s,
                                                       double min_modulus = 1e-3) {
  AngleRelationResiduals r;
  const double scale4 = s.A_polar.T0 + 2.0 * s.A_polar.T1;
  const double scale2 = std::max(std::fabs(s.U_polar.T), std::fabs(s.W_polar.T)) +
                        std::max({s.U_polar.R, s.V_polar.R, s.W_polar.R});
  const auto diff = [](double phi2, double phi1) {
    return detail::wrap_angle(phi2 - phi1, kPi);
  };
  // Fit lambda on the best-conditioned pair.
  double best = -1.0;
  double d = 0.0;
  const struct {
    const PolarParams2& th;
    const PolarParams4& el;
  } pairs[] = {{s.U_polar, s.A_polar}, {s.V_polar, s.B_polar}, {s.W_polar, s.D_polar}};
  for (const auto& p : pairs) {
    const double cond = std::min(p.th.R / (scale2 > 0 ? scale2 : 1.0),
                                 p.el.R1 / (scale4 > 0 ? scale4 : 1.0));
    if (cond > best) {
      best = cond;
      d = diff(p.th.Phi, p.el.Phi1);
    }
  }
  r.lambda = std::fabs(d) < 0.25 * kPi ? 0 : 1;
  const double target = r.lambda * 0.5 * kPi;
  const auto residual = [&](const PolarParams2& th, const PolarParams4& el, double& out,
                            bool& checked) {
    if (th.R < min_modulus * scale2 || el.R1 < min_modulus * scale4) return;
    checked = true;
    out = std::fabs(detail::wrap_angle(diff(th.Phi, el.Phi1) - target, kPi));
  };
  residual(s.U_polar, s.A_polar, r.U, r.U_checked);
  residual(s.V_polar, s.B_polar, r.V, r.V_checked);
  residual(s.W_polar, s.D_polar, r.W, r.W_checked);
  return r;
}

enum class SpecialCase {
  None,
  V0Orthotropic,         // V = O; A, D orthotropic, aligned with B
  V0QuasiHomogeneous,    // V = O and A = D
  V0WarpFree,            // V = O and R1A = 0  ->  v1 = O
  V0ExtensionFree,       // V = O and R1D = 0  ->  v2 = O
  V0FullyStable,         // V = O and R1A = R1D = 0  ->  v1 = v2 = O
  V0R0Free,              // V = O and R0A = R0D = 0
  V0IsotropicExtension,  // V = O and A isotropic
  V1Orthotropic,         // V != O; A, B, D orthotropic, aligned
  V1SquareSymmetric,     // V != O; R1A = R1D = R0B = 0 (balanced cross-ply type)
};

inline const char* to_string(SpecialCase c) {
  switch (c) {
    case SpecialCase::None: return "none";
    case SpecialCase::V0Orthotropic: return "v0_orthotropic_aligned";
    case SpecialCase::V0QuasiHomogeneous: return "v0_quasi_homogeneous";
    case SpecialCase::V0WarpFree: return "v0_warp_free";
    case SpecialCase::V0ExtensionFree: return "v0_extension_free";
    case SpecialCase::V0FullyStable: return "v0_fully_stable";
    case SpecialCase::V0R0Free: return "v0_r0_free";
    case SpecialCase::V0IsotropicExtension: return "v0_isotropic_extension";
    case SpecialCase::V1Orthotropic: return "v1_orthotropic_aligned";
    case SpecialCase::V1SquareSymmetric: return "v1_square_symmetric";
  }
  return "?";
}

/// Signed anisotropy moduli of A, B, D expressed in a common orthotropy
/// frame.  Extraction succeeds when every significant phase sits on the
/// frame's grid (R0 phases mod pi/4, R1 phases mod pi/2) within tol.
struct AlignedModuli {
  double ra0 = 0.0, rb0 = 0.0, rd0 = 0.0;
  double ra1 = 0.0, rb1 = 0.0, rd1 = 0.0;
  double frame = 0.0;       // radians
  bool k1_variant = false;  // some modulus sits on the shifted branch
};

inline std::optional<AlignedModuli> aligned_moduli(const StiffnessSet& s, double tol = 1e-6) {
  const double scale4 = s.A_polar.T0 + 2.0 * s.A_polar.T1;
  AlignedModuli m;
  // Frame from the first significant 2-theta phase, else 4-theta phase.
  if (s.B_polar.R1 >= tol * scale4)
    m.frame = s.B_polar.Phi1;
  else if (s.A_polar.R1 >= tol * scale4)
    m.frame = s.A_polar.Phi1;
  else if (s.D_polar.R1 >= tol * scale4)
    m.frame = s.D_polar.Phi1;
  else if (s.B_polar.R0 >= tol * scale4)
    m.frame = s.B_polar.Phi0;
  else if (s.A_polar.R0 >= tol * scale4)
    m.frame = s.A_polar.Phi0;
  else if (s.D_polar.R0 >= tol * scale4)
    m.frame = s.D_polar.Phi0;

  bool ok = true;
  const auto signed4 = [&](double R, double Phi, bool defined) {
    if (R < tol * scale4 || !defined) return 0.0;
    const double d = detail::wrap_angle(Phi - m.frame, 0.25 * kPi);
    const double d_grid = detail::wrap_angle(Phi - m.frame, 0.5 * kPi);
    if (std::fabs(d) > tol) ok = false;
    // On-grid: cos(4(Phi - frame)) is +-1.
    const bool shifted = std::fabs(d_grid) > 0.125 * kPi;
    if (shifted) m.k1_variant = true;
    return shifted ? -R : R;
  };
  const auto signed2 = [&](double R, double Phi, bool defined) {
    if (R < tol * scale4 || !defined) return 0.0;
    const double d = detail::wrap_angle(Phi - m.frame, 0.5 * kPi);
    const double d_grid = detail::wrap_angle(Phi - m.frame, kPi);
    if (std::fabs(d) > tol) ok = false;
    const bool shifted = std::fabs(d_grid) > 0.25 * kPi;
    if (shifted) m.k1_variant = true;
    return shifted ? -R : R;
  };
  m.ra0 = signed4(s.A_polar.R0, s.A_polar.Phi0, s.A_polar.phi0_defined);
  m.rb0 = signed4(s.B_polar.R0, s.B_polar.Phi0, s.B_polar.phi0_defined);
  m.rd0 = signed4(s.D_polar.R0, s.D_polar.Phi0, s.D_polar.phi0_defined);
  m.ra1 = signed2(s.A_polar.R1, s.A_polar.Phi1, s.A_polar.phi1_defined);
  m.rb1 = signed2(s.B_polar.R1, s.B_polar.Phi1, s.B_polar.phi1_defined);
  m.rd1 = signed2(s.D_polar.R1, s.D_polar.Phi1, s.D_polar.phi1_defined);
  if (!ok) return std::nullopt;
  return m;
}

struct ClassificationReport {
  SymmetryClass4 A_class{}, B_class{}, D_class{};
  SymmetryClass2 U_class{}, V_class{}, W_class{};
  bool elastically_coupled = false;       // B != O
  bool thermally_uncoupled = false;       // V = v1 = v2 = O
  bool quasi_homogeneous = false;         // C = O
  bool thermally_quasi_homogeneous = false;  // Y = O
  bool tqhcl = false;                     // Y = O with v1 or v2 nonzero
  bool warp_free_stable = false;          // coupled and v1 = O
  bool extension_free_stable = false;     // coupled and v2 = O
  SpecialCase special_case = SpecialCase::None;
  std::vector<SpecialCase> satisfied_cases;
  bool k1_variant = false;
  double tolerance = 1e-6;
};

/// Magnitude scale for the v1 = O test.  The floor (6/h) |u| keeps the test
/// meaningful when the coupling inputs themselves are pure roundoff; the
/// contribution terms keep it honest when they dominate.
inline double v1_scale(const StiffnessSet& s, const ComplianceSet& c) {
  return 6.0 / s.h * max_abs(c.u) +
         (2.0 / s.h) * 3.0 *
             (max_abs(c.b) * max_abs(s.U) + 3.0 * max_abs(c.d) * max_abs(s.V));
}

inline double v2_scale(const StiffnessSet& s, const ComplianceSet& c) {
  return 0.5 * s.h * max_abs(c.u) +
         (s.h / 6.0) * 3.0 *
             (3.0 * max_abs(c.a) * max_abs(s.V) + max_abs(c.b) * max_abs(s.W));
}

inline ClassificationReport classify(const StiffnessSet& s, const ComplianceSet& c,
                                     double tol = 1e-6) {
  ClassificationReport r;
  r.tolerance = tol;
  const double scale4 = s.A_polar.T0 + 2.0 * s.A_polar.T1;
  const double scale2 = std::max(max_abs(s.U), max_abs(s.W));

  r.A_class = classify_symmetry(s.A_polar, tol);
  r.B_class = classify_symmetry_scaled(s.B_polar, scale4, tol);
  r.D_class = classify_symmetry(s.D_polar, tol);
  r.U_class = classify_symmetry_scaled(s.U_polar, scale2 > 0 ? scale2 : 1.0, tol);
  r.V_class = classify_symmetry_scaled(s.V_polar, scale2 > 0 ? scale2 : 1.0, tol);
  r.W_class = classify_symmetry_scaled(s.W_polar, scale2 > 0 ? scale2 : 1.0, tol);

  r.elastically_coupled = max_abs(s.B) >= tol * scale4;
  const bool V_zero = scale2 == 0.0 || max_abs(s.V) < tol * scale2;
  const double sv1 = v1_scale(s, c);
  const double sv2 = v2_scale(s, c);
  const bool v1_zero = sv1 == 0.0 || max_abs(c.v1) < tol * sv1;
  const bool v2_zero = sv2 == 0.0 || max_abs(c.v2) < tol * sv2;
  r.thermally_uncoupled = V_zero && v1_zero && v2_zero;

  const HomogeneityPair hp = homogeneity_tensors(s);
  r.quasi_homogeneous = max_abs(hp.C) < tol * scale4;
  r.thermally_quasi_homogeneous = scale2 == 0.0 || max_abs(hp.Y) < tol * scale2;
  r.tqhcl = r.thermally_quasi_homogeneous && !(v1_zero && v2_zero);
  r.warp_free_stable = r.elastically_coupled && v1_zero;
  r.extension_free_stable = r.elastically_coupled && v2_zero;

  // Special cases need coupling, a purely anisotropic B (the identical-ply
  // signature) and a common orthotropy frame.
  const bool pure_aniso_B = std::fabs(s.B_polar.T0) < tol * scale4 &&
                            std::fabs(s.B_polar.T1) < tol * scale4;
  if (r.elastically_coupled && pure_aniso_B) {
    if (const auto am = aligned_moduli(s, tol)) {
      r.k1_variant = am->k1_variant;
      const bool r1b_zero = std::fabs(am->rb1) < tol * scale4;
      const bool r0b_zero = std::fabs(am->rb0) < tol * scale4;
      const bool r1a_zero = std::fabs(am->ra1) < tol * scale4;
      const bool r1d_zero = std::fabs(am->rd1) < tol * scale4;
      const bool r0a_zero = std::fabs(am->ra0) < tol * scale4;
      const bool r0d_zero = std::fabs(am->rd0) < tol * scale4;
      auto& sat = r.satisfied_cases;
      if (r1b_zero) {
        sat.push_back(SpecialCase::V0Orthotropic);
        if (r.quasi_homogeneous) sat.push_back(SpecialCase::V0QuasiHomogeneous);
        if (r1a_zero) sat.push_back(SpecialCase::V0WarpFree);
        if (r1d_zero) sat.push_back(SpecialCase::V0ExtensionFree);
        if (r1a_zero && r1d_zero) sat.push_back(SpecialCase::V0FullyStable);
        if (r0a_zero && r0d_zero) sat.push_back(SpecialCase::V0R0Free);
        if (r0a_zero && r1a_zero) sat.push_back(SpecialCase::V0IsotropicExtension);
      } else {
        sat.push_back(SpecialCase::V1Orthotropic);
        if (r1a_zero && r1d_zero && r0b_zero) sat.push_back(SpecialCase::V1SquareSymmetric);
      }
      static constexpr SpecialCase precedence[] = {
          SpecialCase::V1SquareSymmetric,    SpecialCase::V0FullyStable,
          SpecialCase::V0IsotropicExtension, SpecialCase::V0R0Free,
          SpecialCase::V0WarpFree,           SpecialCase::V0ExtensionFree,
          SpecialCase::V0QuasiHomogeneous,   SpecialCase::V0Orthotropic,
          SpecialCase::V1Orthotropic,
      };
      for (SpecialCase p : precedence) {
        if (std::find(sat.begin(), sat.end(), p) != sat.end()) {
          r.special_case = p;
          break;
        }
      }
    }
  }
  return r;
}

/// (t, r, phi) triple of a 2nd-rank tensor in the closed-form frame.
struct PolarVec {
  double t = 0.0;
  double r = 0.0;
  double phi = 0.0;  // 0 or pi/2; meaningful when r > 0
};

struct CaseThermalCompliances {
  PolarVec u, v1, v2, w;
};

/// Inputs of the closed forms: layer isotropic invariants, SIGNED laminate
/// anisotropy moduli in the common frame, thermal layer data and thickness.
struct CaseInputs {
  double T0 = 0.0, T1 = 0.0;
  double ra0 = 0.0, rb0 = 0.0, rd0 = 0.0;
  double ra1 = 0.0, rb1 = 0.0, rd1 = 0.0;
  double T_gamma = 0.0;
  double rho = 0.0;
  int lambda = 0;
  double h = 0.0;
};

namespace detail {

inline PolarVec polar_vec(double t, double aniso) {
  return {t, std::fabs(aniso), aniso >= 0.0 ? 0.0 : 0.5 * kPi};
}

inline void check_denominator(double den, double scale, int degree, const std::string& name,
                              double eps = 1e-12) {
  double bound = eps;
  for (int i = 0; i < degree; ++i) bound *= scale;
  if (std::fabs(den) <= bound) throw DenominatorVanishesError(name);
}

}  // namespace detail

/// Evaluates the printed-case closed forms.  Angles are relative to the
/// aligned frame; compare against pipeline polar values after rotating by
/// CaseInputs' frame.  Throws DenominatorVanishesError near singular inputs.
inline CaseThermalCompliances closed_form_case(SpecialCase which, const CaseInputs& in) {
  const double T0 = in.T0, T1 = in.T1;
  const double ra0 = in.ra0, rb0 = in.rb0, rd0 = in.rd0;
  const double ra1 = in.ra1, rb1 = in.rb1, rd1 = in.rd1;
  const double tg = in.T_gamma, rho = in.rho, h = in.h;
  const double sg = in.lambda % 2 == 0 ? 1.0 : -1.0;
  const double g = tg - sg * T1 * rho;
  const double scale = T0 + 2.0 * T1;
  CaseThermalCompliances out;
  using detail::polar_vec;

  switch (which) {
    case SpecialCase::V0Orthotropic:
    case SpecialCase::V0QuasiHomogeneous: {
      const double tau1 = 2.0 * ra1 * ra1 * (2.0 * rd1 * rd1 - (rd0 + T0) * T1) +
                          T1 * ((ra0 + T0) * ((rd0 + T0) * T1 - 2.0 * rd1 * rd1) -
                                3.0 * rb0 * rb0 * T1);
      detail::check_denominator(tau1, scale, 4, "tau1");
      out.u = polar_vec(
          (((ra0 + T0) * ((rd0 + T0) * T1 - 2.0 * rd1 * rd1) - 3.0 * rb0 * rb0 * T1) * tg +
           2.0 * sg * ra1 * ra1 * (2.0 * rd1 * rd1 - (rd0 + T0) * T1) * rho) /
              (4.0 * tau1),
          -ra1 * ((rd0 + T0) * T1 - 2.0 * rd1 * rd1) * g / (2.0 * tau1));
      out.v1 = polar_vec(-3.0 * ra1 * rb0 * rd1 * g / (h * tau1),
                         3.0 * ra1 * rb0 * T1 * g / (h * tau1));
      out.v2 = polar_vec(-h * ra1 * rb0 * rd1 * g / (4.0 * tau1),
                         h * rb0 * rd1 * T1 * g / (4.0 * tau1));
      out.w = polar_vec(
          (((rd0 + T0) * ((ra0 + T0) * T1 - 2.0 * ra1 * ra1) - 3.0 * rb0 * rb0 * T1) * tg +
           2.0 * sg * rd1 * rd1 * (2.0 * ra1 * ra1 - (ra0 + T0) * T1) * rho) /
              (4.0 * tau1),
          -rd1 * ((ra0 + T0) * T1 - 2.0 * ra1 * ra1) * g / (2.0 * tau1));
      break;
    }
    case SpecialCase::V0WarpFree: {
      const double den = (ra0 + T0) * ((rd0 + T0) * T1 - 2.0 * rd1 * rd1) -
                         3.0 * rb0 * rb0 * T1;
      detail::check_denominator(den, scale, 3, "warp-free denominator");
      out.u = polar_vec(tg / (4.0 * T1), 0.0);
      out.v1 = polar_vec(0.0, 0.0);
      out.v2 = polar_vec(0.0, h * rb0 * rd1 * g / (4.0 * den));
      out.w = polar_vec((((ra0 + T0) * (rd0 + T0) - 3.0 * rb0 * rb0) * tg -
                         2.0 * sg * (ra0 + T0) * rd1 * rd1 * rho) /
                            (4.0 * den),
                        -(ra0 + T0) * rd1 * g / (2.0 * den));
      break;
    }
    case SpecialCase::V0ExtensionFree: {
      const double den = (rd0 + T0) * ((ra0 + T0) * T1 - 2.0 * ra1 * ra1) -
                         3.0 * rb0 * rb0 * T1;
      detail::check_denominator(den, scale, 3, "extension-free denominator");
      out.u = polar_vec((((ra0 + T0) * (rd0 + T0) - 3.0 * rb0 * rb0) * tg -
                         2.0 * sg * (rd0 + T0) * ra1 * ra1 * rho) /
                            (4.0 * den),
                        -(rd0 + T0) * ra1 * g / (2.0 * den));
      out.v1 = polar_vec(0.0, 3.0 * ra1 * rb0 * g / (h * den));
      out.v2 = polar_vec(0.0, 0.0);
      out.w = polar_vec(tg / (4.0 * T1), 0.0);
      break;
    }
    case SpecialCase::V0FullyStable: {
      out.u = polar_vec(tg / (4.0 * T1), 0.0);
      out.v1 = polar_vec(0.0, 0.0);
      out.v2 = polar_vec(0.0, 0.0);
      out.w = polar_vec(tg / (4.0 * T1), 0.0);
      break;
    }
    case SpecialCase::V0R0Free: {
      const double tau0 = T0 * T0 * T1 * T1 -
                          2.0 * (ra1 * ra1 + rd1 * rd1) * T0 * T1 -
                          3.0 * rb0 * rb0 * T1 * T1 + 4.0 * ra1 * ra1 * rd1 * rd1;
      detail::check_denominator(tau0, scale, 4, "tau0");
      out.u = polar_vec(((T0 * T0 - 3.0 * rb0 * rb0) * T1 * tg - 2.0 * rd1 * rd1 * T0 * tg +
                         2.0 * sg * ra1 * ra1 * (2.0 * rd1 * rd1 - T0 * T1) * rho) /
                            (4.0 * tau0),
                        -ra1 * (T0 * T1 - 2.0 * rd1 * rd1) * g / (2.0 * tau0));
      out.v1 = polar_vec(-3.0 * ra1 * rb0 * rd1 * g / (h * tau0),
                         3.0 * ra1 * rb0 * T1 * g / (h * tau0));
      out.v2 = polar_vec(-h * ra1 * rb0 * rd1 * g / (4.0 * tau0),
                         h * rb0 * rd1 * T1 * g / (4.0 * tau0));
      out.w = polar_vec(((T0 * T0 - 3.0 * rb0 * rb0) * T1 * tg - 2.0 * ra1 * ra1 * T0 * tg +
                         2.0 * sg * rd1 * rd1 * (2.0 * ra1 * ra1 - T0 * T1) * rho) /
                            (4.0 * tau0),
                        -rd1 * (T0 * T1 - 2.0 * ra1 * ra1) * g / (2.0 * tau0));
      break;
    }
    case SpecialCase::V0IsotropicExtension: {
      const double den = T0 * (rd0 + T0) * T1 - 2.0 * T0 * rd1 * rd1 -
                         3.0 * rb0 * rb0 * T1;
      detail::check_denominator(den, scale, 3, "isotropic-extension denominator");
      out.u = polar_vec(tg / (4.0 * T1), 0.0);
      out.v1 = polar_vec(0.0, 0.0);
      out.v2 = polar_vec(0.0, h * rb0 * rd1 * g / (4.0 * den));
      out.w = polar_vec(
          ((T0 * (rd0 + T0) - 3.0 * rb0 * rb0) * tg - 2.0 * sg * T0 * rd1 * rd1 * rho) /
              (4.0 * den),
          -T0 * rd1 * g / (2.0 * den));
      break;
    }
    case SpecialCase::V1Orthotropic: {
      const double psi =
          36.0 * rb1 * rb1 * rb1 * rb1 + 12.0 * rb0 * rb1 * (ra1 + rd1) * T1 +
          2.0 * ra1 * ra1 * (2.0 * rd1 * rd1 - (rd0 + T0) * T1) -
          6.0 * rb1 * rb1 * (4.0 * ra1 * rd1 + (ra0 + rd0 + 2.0 * T0) * T1) +
          T1 * ((ra0 + T0) * ((rd0 + T0) * T1 - 2.0 * rd1 * rd1) - 3.0 * rb0 * rb0 * T1);
      detail::check_denominator(psi, scale, 4, "psi");
      const double ku =
          ra1 * ((rd0 + T0) * T1 - 2.0 * rd1 * rd1) - 3.0 * rb0 * rb1 * T1 +
          6.0 * rb1 * rb1 * rd1;
      const double kw =
          rd1 * ((ra0 + T0) * T1 - 2.0 * ra1 * ra1) - 3.0 * rb0 * rb1 * T1 +
          6.0 * rb1 * rb1 * ra1;
      const double kt = rd0 * ra1 * rb1 + ra0 * rb1 * rd1 -
                        rb0 * (3.0 * rb1 * rb1 + ra1 * rd1) + rb1 * (ra1 + rd1) * T0;
      const double kv1 =
          6.0 * rb1 * rb1 * rb1 + rb0 * ra1 * T1 -
          rb1 * (2.0 * ra1 * rd1 + (ra0 + T0) * T1);
      const double kv2 =
          6.0 * rb1 * rb1 * rb1 + rb0 * rd1 * T1 -
          rb1 * (2.0 * ra1 * rd1 + (rd0 + T0) * T1);
      const double sq_arr = ra1 * rd1 - 3.0 * rb1 * rb1;
      out.u = polar_vec(
          ((12.0 * rb0 * rb1 * rd1 - 6.0 * rb1 * rb1 * (T0 + rd0) - 3.0 * rb0 * rb0 * T1 +
            rd0 * (ra0 + T0) * T1 + (ra0 + T0) * (T0 * T1 - 2.0 * rd1 * rd1)) *
               tg +
           2.0 * sg *
               (2.0 * sq_arr * sq_arr -
                (rd0 * ra1 * ra1 - 6.0 * rb0 * ra1 * rb1 + ra1 * ra1 * T0 +
                 3.0 * rb1 * rb1 * (ra0 + T0)) *
                    T1) *
               rho) /
              (4.0 * psi),
          -ku * g / (2.0 * psi));
      out.v1 = polar_vec(3.0 * kt * g / (h * psi), 3.0 * kv1 * g / (h * psi));
      out.v2 = polar_vec(h * kt * g / (4.0 * psi), h * kv2 * g / (4.0 * psi));
      out.w = polar_vec(
          ((12.0 * rb0 * rb1 * ra1 - 6.0 * rb1 * rb1 * (T0 + ra0) - 3.0 * rb0 * rb0 * T1 +
            ra0 * (rd0 + T0) * T1 + (rd0 + T0) * (T0 * T1 - 2.0 * ra1 * ra1)) *
               tg +
           2.0 * sg *
               (2.0 * sq_arr * sq_arr -
                (ra0 * rd1 * rd1 - 6.0 * rb0 * rd1 * rb1 + rd1 * rd1 * T0 +
                 3.0 * rb1 * rb1 * (rd0 + T0)) *
                    T1) *
               rho) /
              (4.0 * psi),
          -kw * g / (2.0 * psi));
      break;
    }
    case SpecialCase::V1SquareSymmetric: {
      const double dd = (rd0 + T0) * T1 - 6.0 * rb1 * rb1;
      const double da = (ra0 + T0) * T1 - 6.0 * rb1 * rb1;
      detail::check_denominator(dd, scale, 2, "square-symmetric D denominator");
      detail::check_denominator(da, scale, 2, "square-symmetric A denominator");
      out.u = polar_vec(((rd0 + T0) * tg - 6.0 * sg * rb1 * rb1 * rho) / (4.0 * dd), 0.0);
      out.v1 = polar_vec(0.0, -3.0 * rb1 * g / (h * dd));
      out.v2 = polar_vec(0.0, -h * rb1 * g / (4.0 * da));
      out.w = polar_vec(((ra0 + T0) * tg - 6.0 * sg * rb1 * rb1 * rho) / (4.0 * da), 0.0);
      break;
    }
    case SpecialCase::None:
      throw ValidationError("no closed form for an unclassified laminate");
  }
  return out;
}

}  // namespace polarlam
