// SPDX-License-Identifier: Apache-2.0
#pragma once

// Shared test helpers: seeded generators and the aligned-frame synthesizer
// used by the closed-form cross-checks.

#include <cmath>
#include <random>
#include <vector>

#include "polarlam/polarlam.hpp"

namespace test_support {

using namespace polarlam;

inline std::mt19937_64 make_rng(unsigned seed) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Well-conditioned random polar parameters (normalized angle branches).
inline PolarParams4 random_polar4(std::mt19937_64& rng) {
  PolarParams4 p;
  p.T0 = uniform(rng, 0.5, 3.0);
  p.T1 = uniform(rng, 0.5, 3.0);
  p.R0 = uniform(rng, 0.05, 2.0);
  p.R1 = uniform(rng, 0.05, 2.0);
  p.Phi1 = uniform(rng, -0.49, 0.49) * kPi;
  p.Phi0 = p.Phi1 + uniform(rng, -0.24, 0.24) * kPi;
  return p;
}

inline PolarParamsB9 random_polarB9(std::mt19937_64& rng) {
  PolarParamsB9 p;
  p.t0 = uniform(rng, -2.0, 2.0);
  p.t1 = uniform(rng, -2.0, 2.0);
  p.t3 = uniform(rng, -2.0, 2.0);
  p.r0 = uniform(rng, 0.05, 2.0);
  p.r1 = uniform(rng, 0.05, 2.0);
  p.r2 = uniform(rng, 0.05, 2.0);
  p.phi1 = uniform(rng, -0.49, 0.49) * kPi;
  p.phi2 = uniform(rng, -0.49, 0.49) * kPi;
  p.phi0 = p.phi1 + uniform(rng, -0.24, 0.24) * kPi;
  return p;
}

/// Random orthotropic ply with a transverse-dominant thermal expansion.
inline PlyMaterial random_material(std::mt19937_64& rng) {
  PlyMaterial m;
  m.name = "random";
  m.E1 = uniform(rng, 50e3, 250e3);
  m.E2 = uniform(rng, 5e3, 30e3);
  m.G12 = uniform(rng, 3e3, 15e3);
  m.nu12 = uniform(rng, 0.15, 0.38);
  m.alpha1 = uniform(rng, -1e-6, 5e-6);
  m.alpha2 = uniform(rng, 1e-5, 5e-4);
  return m;
}

inline Laminate random_laminate(std::mt19937_64& rng, const std::string& material, int n_min = 2,
                                int n_max = 12, bool grid_angles = false) {
  const int n = uniform_int(rng, n_min, n_max);
  std::vector<double> angles(n);
  for (double& a : angles) {
    if (grid_angles)
      a = uniform_int(rng, 0, 3) * 0.25 * kPi;  // 0, 45, 90, 135
    else
      a = uniform(rng, -0.5, 0.5) * kPi;
  }
  return make_laminate("random", material, angles, 0.125);
}

/// Builds the Cartesian stiffness set of a conforming synthesized laminate
/// directly from aligned-frame SIGNED polar moduli: every tensor is
/// orthotropic about theta = 0, B is purely anisotropic, and the thermal
/// tensors follow the layer ratio rho and quarter-turn offset lambda.
inline StiffnessSet stiffness_from_case(const CaseInputs& in) {
  const double sg = in.lambda % 2 == 0 ? 1.0 : -1.0;
  const auto mat4 = [](double T0, double T1, double r0, double r1) {
    KelvinMat m;
    m.m11 = T0 + 2.0 * T1 + r0 + 4.0 * r1;
    m.m12 = -T0 + 2.0 * T1 - r0;
    m.m16 = 0.0;
    m.m22 = T0 + 2.0 * T1 + r0 - 4.0 * r1;
    m.m26 = 0.0;
    m.m66 = 2.0 * (T0 - r0);
    return m;
  };
  const auto vec2 = [](double T, double aniso) {
    return KelvinVec{T + aniso, T - aniso, 0.0};
  };
  StiffnessSet s;
  s.h = in.h;
  s.A = mat4(in.T0, in.T1, in.ra0, in.ra1);
  s.B = mat4(0.0, 0.0, in.rb0, in.rb1);
  s.D = mat4(in.T0, in.T1, in.rd0, in.rd1);
  s.U = vec2(in.T_gamma, sg * in.rho * in.ra1);
  s.V = vec2(0.0, sg * in.rho * in.rb1);
  s.W = vec2(in.T_gamma, sg * in.rho * in.rd1);
  s.A_polar = polar_from_cartesian_4(s.A);
  s.B_polar = polar_from_cartesian_4(s.B);
  s.D_polar = polar_from_cartesian_4(s.D);
  s.U_polar = polar_from_cartesian_2(s.U);
  s.V_polar = polar_from_cartesian_2(s.V);
  s.W_polar = polar_from_cartesian_2(s.W);
  return s;
}

/// True when the assembled constitutive matrix is positive definite (checked
/// through the pipeline's own Schur blocks plus leading minors).
inline bool case_inputs_physical(const CaseInputs& in) {
  const StiffnessSet s = stiffness_from_case(in);
  // A and D positive definite.
  const auto pd = [](const KelvinMat& m) {
    return m.m11 > 0.0 && m.m11 * m.m22 - m.m12 * m.m12 > 0.0 && m.m66 > 0.0;
  };
  if (!pd(s.A) || !pd(s.D)) return false;
  try {
    const ElasticCompliance e = compliance_elastic(s);
    return pd(e.a) && pd(e.d);
  } catch (const SingularBlockError&) {
    return false;
  }
}

inline double rel_diff(double a, double b, double scale) {
  return std::fabs(a - b) / (scale > 0.0 ? scale : 1.0);
}

}  // namespace test_support
