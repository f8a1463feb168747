// SPDX-License-Identifier: Apache-2.0
#pragma once

// Ply-level data: engineering constants to plane-stress reduced stiffness Q,
// thermal expansion alpha, thermal stiffness gamma = Q * alpha, and the polar
// bundle of a layer.  Units are fixed: MPa for moduli, 1/degC for expansion.

#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "polarlam/errors.hpp"
#include "polarlam/polar.hpp"

namespace polarlam {

struct PlyMaterial {
  std::string name;
  double E1 = 0.0;      // MPa
  double E2 = 0.0;      // MPa
  double G12 = 0.0;     // MPa
  double nu12 = 0.0;
  double alpha1 = 0.0;  // 1/degC
  double alpha2 = 0.0;  // 1/degC
};

inline void validate(const PlyMaterial& mat) {
  if (!(mat.E1 > 0.0) || !(mat.E2 > 0.0) || !(mat.G12 > 0.0))
    throw MaterialError("material '" + mat.name + "': moduli must be positive");
  const double nu21 = mat.nu12 * mat.E2 / mat.E1;
  if (!(1.0 - mat.nu12 * nu21 > 0.0))
    throw MaterialError("material '" + mat.name + "': 1 - nu12*nu21 must be positive");
}

/// Plane-stress reduced stiffness in the material frame (Kelvin components,
/// so the 66 entry is 2*G12 and the shear couplings vanish).
inline KelvinMat reduced_stiffness(const PlyMaterial& mat) {
  validate(mat);
  const double nu21 = mat.nu12 * mat.E2 / mat.E1;
  const double den = 1.0 - mat.nu12 * nu21;
  KelvinMat q;
  q.m11 = mat.E1 / den;
  q.m22 = mat.E2 / den;
  q.m12 = mat.nu12 * mat.E2 / den;
  q.m66 = 2.0 * mat.G12;
  q.m16 = 0.0;
  q.m26 = 0.0;
  return q;
}

inline KelvinVec thermal_expansion(const PlyMaterial& mat) {
  return {mat.alpha1, mat.alpha2, 0.0};
}

/// gamma = Q * alpha, both in the same frame.
inline KelvinVec thermal_stiffness(const KelvinMat& q, const KelvinVec& alpha) {
  return q * alpha;
}

/// Polar bundle of a layer: Q and gamma in polar form, the orthotropy offset
/// lambda between their axes (gamma is aligned with Q or rotated a quarter
/// turn), and the modulus ratio rho = R_gamma / R1.
struct PlyPolar {
  PolarParams4 stiffness;  // of Q
  PolarParams2 thermal;    // of gamma
  double rho = 0.0;        // 1/degC; meaningless when !rho_defined
  int lambda = 0;          // 0 or 1
  bool rho_defined = false;
};

inline PlyPolar ply_polar(const PlyMaterial& mat, double tol = 1e-6) {
  PlyPolar p;
  const KelvinMat q = reduced_stiffness(mat);
  p.stiffness = polar_from_cartesian_4(q);
  p.thermal = polar_from_cartesian_2(thermal_stiffness(q, thermal_expansion(mat)));
  const double elastic_scale = p.stiffness.T0 + 2.0 * p.stiffness.T1;
  const double thermal_scale = std::fabs(p.thermal.T) + p.thermal.R;

  const bool r1_zero = p.stiffness.R1 < tol * elastic_scale;
  const bool rg_zero = thermal_scale == 0.0 || p.thermal.R < tol * thermal_scale;

  if (rg_zero) {
    p.lambda = 0;
  } else {
    // Both axes live in the material frame where Phi1 = 0 (or is undefined,
    // in which case alignment is conventional).
    const double ref = r1_zero ? 0.0 : p.stiffness.Phi1;
    const double diff = detail::wrap_angle(p.thermal.Phi - ref, kPi);
    if (std::fabs(diff) < tol)
      p.lambda = 0;
    else if (std::fabs(std::fabs(diff) - 0.5 * kPi) < tol)
      p.lambda = 1;
    else
      throw MaterialError("material '" + mat.name +
                          "': thermal axis is neither aligned with nor orthogonal "
                          "to the elastic orthotropy axis");
  }

  p.rho_defined = !r1_zero;
  p.rho = p.rho_defined ? p.thermal.R / p.stiffness.R1 : 0.0;
  return p;
}

/// Name-keyed material store.  T300/5208 carbon-epoxy ships built in.
class MaterialCatalog {
public:
  // NOTE: alpha2 of this data set is three orders of magnitude above alpha1;
  // the value is kept verbatim from the source data rather than "fixed".
  static PlyMaterial t300_5208() {
    return {"T300/5208", 181000.0, 10300.0, 7170.0, 0.28, 2.0e-6, 2.25e-3};
  }

  static MaterialCatalog with_builtins() {
    MaterialCatalog c;
    c.add(t300_5208());
    return c;
  }

  void add(PlyMaterial mat) {
    validate(mat);
    entries_[mat.name] = std::move(mat);
  }

  bool contains(const std::string& name) const { return entries_.count(name) != 0; }

  const PlyMaterial& get(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw UnknownMaterialError(name);
    return it->second;
  }

  const std::map<std::string, PlyMaterial>& entries() const { return entries_; }

private:
  std::map<std::string, PlyMaterial> entries_;
};

}  // namespace polarlam
