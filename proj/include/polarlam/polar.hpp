// SPDX-License-Identifier: Apache-2.0
#pragma once

// Polar representation of plane tensors: invariant moduli plus angles.  A
// 4th-rank elastic-type tensor decomposes into an isotropic phase (T0, T1)
// and two anisotropic phases of amplitudes R0 (varying with 4*theta) and R1
// (varying with 2*theta), shifted by the invariant angle Phi0 - Phi1.  A
// 2nd-rank symmetric tensor carries (T, R, Phi).  The coupling compliance
// block lacks the major symmetry and needs nine parameters.

#include <cmath>

#include "polarlam/kelvin.hpp"

namespace polarlam {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

namespace detail {

/// Reduce an angle into (-period/2, period/2].
inline double wrap_angle(double a, double period) {
  double r = std::remainder(a, period);
  if (r <= -0.5 * period) r += period;
  return r;
}

}  // namespace detail

struct PolarParams4 {
  double T0 = 0.0, T1 = 0.0;   // isotropy invariants
  double R0 = 0.0, R1 = 0.0;   // anisotropy moduli, >= 0
  double Phi0 = 0.0, Phi1 = 0.0;
  bool phi0_defined = true;    // false when the matching modulus vanishes
  bool phi1_defined = true;
};

struct PolarParams2 {
  double T = 0.0, R = 0.0;
  double Phi = 0.0;
  bool phi_defined = true;
};

/// Nine-parameter form of a minor-symmetric-only plane tensor.
struct PolarParamsB9 {
  double t0 = 0.0, t1 = 0.0, t3 = 0.0;
  double r0 = 0.0, r1 = 0.0, r2 = 0.0;
  double phi0 = 0.0, phi1 = 0.0, phi2 = 0.0;
  bool phi0_defined = true, phi1_defined = true, phi2_defined = true;
};

enum class SymmetryClass4 {
  GenericAnisotropic,
  OrdinaryOrthotropicK0,
  OrdinaryOrthotropicK1,
  R0Orthotropic,
  SquareSymmetric,
  Isotropic,
};

enum class SymmetryClass2 { Anisotropic2, Isotropic2 };

/// Normalizes Phi1 into (-pi/2, pi/2] and picks the Phi0 branch closest to
/// Phi1, so that Phi0 - Phi1 lands in (-pi/4, pi/4].
inline void normalize_angles(PolarParams4& p) {
  p.Phi1 = detail::wrap_angle(p.Phi1, kPi);
  p.Phi0 = p.Phi1 + detail::wrap_angle(p.Phi0 - p.Phi1, 0.5 * kPi);
}

inline void normalize_angles(PolarParams2& p) { p.Phi = detail::wrap_angle(p.Phi, kPi); }

inline void normalize_angles(PolarParamsB9& p) {
  p.phi1 = detail::wrap_angle(p.phi1, kPi);
  p.phi2 = detail::wrap_angle(p.phi2, kPi);
  p.phi0 = p.phi1 + detail::wrap_angle(p.phi0 - p.phi1, 0.5 * kPi);
}

inline PolarParams4 polar_from_cartesian_4(const KelvinMat& m) {
  PolarParams4 p;
  p.T0 = (m.m11 + m.m22 - 2.0 * m.m12 + 2.0 * m.m66) / 8.0;
  p.T1 = (m.m11 + m.m22 + 2.0 * m.m12) / 8.0;
  const double re0 = (m.m11 + m.m22 - 2.0 * m.m12 - 2.0 * m.m66) / 8.0;
  const double im0 = 2.0 * kSqrt2 * (m.m16 - m.m26) / 8.0;
  const double re1 = (m.m11 - m.m22) / 8.0;
  const double im1 = kSqrt2 * (m.m16 + m.m26) / 8.0;
  p.R0 = std::hypot(re0, im0);
  p.R1 = std::hypot(re1, im1);
  p.phi0_defined = p.R0 != 0.0;
  p.phi1_defined = p.R1 != 0.0;
  p.Phi0 = p.phi0_defined ? 0.25 * std::atan2(im0, re0) : 0.0;
  p.Phi1 = p.phi1_defined ? 0.5 * std::atan2(im1, re1) : 0.0;
  normalize_angles(p);
  return p;
}

inline KelvinMat cartesian_from_polar_4(const PolarParams4& p, double theta) {
  const double c0 = std::cos(4.0 * (p.Phi0 - theta));
  const double s0 = std::sin(4.0 * (p.Phi0 - theta));
  const double c1 = std::cos(2.0 * (p.Phi1 - theta));
  const double s1 = std::sin(2.0 * (p.Phi1 - theta));
  KelvinMat m;
  m.m11 = p.T0 + 2.0 * p.T1 + p.R0 * c0 + 4.0 * p.R1 * c1;
  m.m12 = -p.T0 + 2.0 * p.T1 - p.R0 * c0;
  m.m16 = kSqrt2 * (p.R0 * s0 + 2.0 * p.R1 * s1);
  m.m22 = p.T0 + 2.0 * p.T1 + p.R0 * c0 - 4.0 * p.R1 * c1;
  m.m26 = kSqrt2 * (-p.R0 * s0 + 2.0 * p.R1 * s1);
  m.m66 = 2.0 * (p.T0 - p.R0 * c0);
  return m;
}

inline PolarParams2 polar_from_cartesian_2(const KelvinVec& v) {
  PolarParams2 p;
  p.T = 0.5 * (v.v1 + v.v2);
  const double re = 0.5 * (v.v1 - v.v2);
  const double im = v.v6 / kSqrt2;
  p.R = std::hypot(re, im);
  p.phi_defined = p.R != 0.0;
  p.Phi = p.phi_defined ? 0.5 * std::atan2(im, re) : 0.0;
  normalize_angles(p);
  return p;
}

inline KelvinVec cartesian_from_polar_2(const PolarParams2& p, double theta) {
  const double c = std::cos(2.0 * (p.Phi - theta));
  const double s = std::sin(2.0 * (p.Phi - theta));
  return {p.T + p.R * c, p.T - p.R * c, kSqrt2 * p.R * s};
}

inline PolarParamsB9 polar_from_cartesian_B(const KelvinMatAsym& m) {
  PolarParamsB9 p;
  p.t0 = (m.m11 + m.m22 - m.m12 - m.m21 + 2.0 * m.m66) / 8.0;
  p.t1 = (m.m11 + m.m22 + m.m12 + m.m21) / 8.0;
  p.t3 = (m.m61 - m.m62 - m.m16 + m.m26) / (4.0 * kSqrt2);
  const double re0 = (m.m11 + m.m22 - m.m12 - m.m21 - 2.0 * m.m66) / 8.0;
  const double im0 = (m.m16 - m.m26 + m.m61 - m.m62) / (4.0 * kSqrt2);
  const double re1 = (m.m11 - m.m22 + m.m12 - m.m21) / 8.0;
  const double im1 = (m.m61 + m.m62) / (4.0 * kSqrt2);
  const double re2 = (m.m11 - m.m22 - m.m12 + m.m21) / 8.0;
  const double im2 = (m.m16 + m.m26) / (4.0 * kSqrt2);
  p.r0 = std::hypot(re0, im0);
  p.r1 = std::hypot(re1, im1);
  p.r2 = std::hypot(re2, im2);
  p.phi0_defined = p.r0 != 0.0;
  p.phi1_defined = p.r1 != 0.0;
  p.phi2_defined = p.r2 != 0.0;
  p.phi0 = p.phi0_defined ? 0.25 * std::atan2(im0, re0) : 0.0;
  p.phi1 = p.phi1_defined ? 0.5 * std::atan2(im1, re1) : 0.0;
  p.phi2 = p.phi2_defined ? 0.5 * std::atan2(im2, re2) : 0.0;
  normalize_angles(p);
  return p;
}

inline KelvinMatAsym cartesian_from_polar_B(const PolarParamsB9& p, double theta) {
  const double c0 = std::cos(4.0 * (p.phi0 - theta));
  const double s0 = std::sin(4.0 * (p.phi0 - theta));
  const double c1 = std::cos(2.0 * (p.phi1 - theta));
  const double s1 = std::sin(2.0 * (p.phi1 - theta));
  const double c2 = std::cos(2.0 * (p.phi2 - theta));
  const double s2 = std::sin(2.0 * (p.phi2 - theta));
  KelvinMatAsym m;
  m.m11 = p.t0 + 2.0 * p.t1 + p.r0 * c0 + 2.0 * p.r1 * c1 + 2.0 * p.r2 * c2;
  m.m12 = -p.t0 + 2.0 * p.t1 - p.r0 * c0 + 2.0 * p.r1 * c1 - 2.0 * p.r2 * c2;
  m.m16 = kSqrt2 * (-p.t3 + p.r0 * s0 + 2.0 * p.r2 * s2);
  m.m21 = -p.t0 + 2.0 * p.t1 - p.r0 * c0 - 2.0 * p.r1 * c1 + 2.0 * p.r2 * c2;
  m.m22 = p.t0 + 2.0 * p.t1 + p.r0 * c0 - 2.0 * p.r1 * c1 - 2.0 * p.r2 * c2;
  m.m26 = kSqrt2 * (p.t3 - p.r0 * s0 + 2.0 * p.r2 * s2);
  m.m61 = kSqrt2 * (p.t3 + p.r0 * s0 + 2.0 * p.r1 * s1);
  m.m62 = kSqrt2 * (-p.t3 - p.r0 * s0 + 2.0 * p.r1 * s1);
  m.m66 = 2.0 * (p.t0 - p.r0 * c0);
  return m;
}

inline PolarParams4 rotate(const PolarParams4& p, double delta) {
  PolarParams4 r = p;
  if (r.phi0_defined) r.Phi0 += delta;
  if (r.phi1_defined) r.Phi1 += delta;
  normalize_angles(r);
  return r;
}

inline PolarParams2 rotate(const PolarParams2& p, double delta) {
  PolarParams2 r = p;
  if (r.phi_defined) r.Phi += delta;
  normalize_angles(r);
  return r;
}

inline PolarParamsB9 rotate(const PolarParamsB9& p, double delta) {
  PolarParamsB9 r = p;
  if (r.phi0_defined) r.phi0 += delta;
  if (r.phi1_defined) r.phi1 += delta;
  if (r.phi2_defined) r.phi2 += delta;
  normalize_angles(r);
  return r;
}

/// Symmetry classification against an externally supplied magnitude; moduli
/// are compared as R/scale < tol, angle residuals directly in radians.
inline SymmetryClass4 classify_symmetry_scaled(const PolarParams4& p, double scale, double tol) {
  const bool r0_zero = p.R0 < tol * scale;
  const bool r1_zero = p.R1 < tol * scale;
  if (r0_zero && r1_zero) return SymmetryClass4::Isotropic;
  if (r1_zero) return SymmetryClass4::SquareSymmetric;
  if (r0_zero) return SymmetryClass4::R0Orthotropic;
  const double d = detail::wrap_angle(p.Phi0 - p.Phi1, 0.5 * kPi);
  if (std::fabs(d) < tol) return SymmetryClass4::OrdinaryOrthotropicK0;
  if (std::fabs(d - 0.25 * kPi) < tol || std::fabs(d + 0.25 * kPi) < tol)
    return SymmetryClass4::OrdinaryOrthotropicK1;
  return SymmetryClass4::GenericAnisotropic;
}

inline SymmetryClass4 classify_symmetry(const PolarParams4& p, double tol = 1e-6) {
  const double scale = p.T0 + 2.0 * p.T1;
  if (scale <= 0.0)
    throw ValidationError("symmetry classification: T0 + 2 T1 must be positive");
  return classify_symmetry_scaled(p, scale, tol);
}

inline SymmetryClass2 classify_symmetry_scaled(const PolarParams2& p, double scale, double tol) {
  return p.R < tol * scale ? SymmetryClass2::Isotropic2 : SymmetryClass2::Anisotropic2;
}

inline SymmetryClass2 classify_symmetry(const PolarParams2& p, double tol = 1e-6) {
  const double scale = std::fabs(p.T) + p.R;
  if (scale == 0.0) return SymmetryClass2::Isotropic2;
  return classify_symmetry_scaled(p, scale, tol);
}

inline const char* to_string(SymmetryClass4 c) {
  switch (c) {
    case SymmetryClass4::GenericAnisotropic: return "generic_anisotropic";
    case SymmetryClass4::OrdinaryOrthotropicK0: return "ordinary_orthotropic_k0";
    case SymmetryClass4::OrdinaryOrthotropicK1: return "ordinary_orthotropic_k1";
    case SymmetryClass4::R0Orthotropic: return "r0_orthotropic";
    case SymmetryClass4::SquareSymmetric: return "square_symmetric";
    case SymmetryClass4::Isotropic: return "isotropic";
  }
  return "?";
}

inline const char* to_string(SymmetryClass2 c) {
  return c == SymmetryClass2::Isotropic2 ? "isotropic" : "anisotropic";
}

}  // namespace polarlam
