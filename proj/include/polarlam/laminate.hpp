// SPDX-License-Identifier: Apache-2.0
#pragma once

// Stacking sequences and their homogenized tensors.  The extension, coupling
// and bending stiffness sets {A, B, D} and their thermal counterparts
// {U, V, W} are thickness-normalized weighted sums over the plies, with
// weights (z_k - z_{k-1})/h, (z_k^2 - z_{k-1}^2)/h^2 and 4(z_k^3 -
// z_{k-1}^3)/h^3.  Two evaluation routes are provided: direct Cartesian
// summation, and homogenization of the polar parameters (which keeps the
// isotropic and anisotropic phases separated and, for identical plies,
// factors through the lamination parameters).

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "polarlam/material.hpp"

namespace polarlam {

struct Ply {
  std::string material;
  double angle = 0.0;  // radians, laminate frame
};

struct Laminate {
  std::string name;
  std::vector<Ply> plies;        // bottom to top
  double ply_thickness = 0.125;  // mm
};

inline Laminate make_laminate(std::string name, std::string material,
                              const std::vector<double>& angles_rad,
                              double ply_thickness = 0.125) {
  Laminate lam;
  lam.name = std::move(name);
  lam.ply_thickness = ply_thickness;
  lam.plies.reserve(angles_rad.size());
  for (double a : angles_rad) lam.plies.push_back({material, a});
  return lam;
}

inline void validate(const Laminate& lam) {
  if (lam.plies.empty()) throw ValidationError("laminate '" + lam.name + "' has no plies");
  if (!(lam.ply_thickness > 0.0))
    throw ValidationError("laminate '" + lam.name + "': ply thickness must be positive");
}

inline bool is_hybrid(const Laminate& lam) {
  for (const Ply& p : lam.plies)
    if (p.material != lam.plies.front().material) return true;
  return false;
}

inline double total_thickness(const Laminate& lam) {
  return static_cast<double>(lam.plies.size()) * lam.ply_thickness;
}

/// z_0 .. z_n, midplane at zero.
inline std::vector<double> z_coordinates(const Laminate& lam) {
  validate(lam);
  const std::size_t n = lam.plies.size();
  const double h = total_thickness(lam);
  std::vector<double> z(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    z[k] = -0.5 * h + static_cast<double>(k) * lam.ply_thickness;
  return z;
}

namespace detail {

/// Normalized stacking weights for the three moment orders.
struct StackWeights {
  std::vector<double> w1, w2, w3;
};

inline StackWeights stack_weights(const Laminate& lam) {
  const std::vector<double> z = z_coordinates(lam);
  const double h = total_thickness(lam);
  const std::size_t n = lam.plies.size();
  StackWeights w;
  w.w1.resize(n);
  w.w2.resize(n);
  w.w3.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double a = z[k], b = z[k + 1];
    w.w1[k] = (b - a) / h;
    w.w2[k] = (b * b - a * a) / (h * h);
    w.w3[k] = 4.0 * (b * b * b - a * a * a) / (h * h * h);
  }
  return w;
}

}  // namespace detail

struct StiffnessSet {
  KelvinMat A, B, D;  // MPa
  KelvinVec U, V, W;  // MPa/degC
  double h = 0.0;     // mm
  PolarParams4 A_polar, B_polar, D_polar;
  PolarParams2 U_polar, V_polar, W_polar;
};

/// Direct Cartesian summation route.
inline StiffnessSet stiffness_tensors(const Laminate& lam, const MaterialCatalog& catalog) {
  const auto w = detail::stack_weights(lam);
  StiffnessSet s;
  s.h = total_thickness(lam);
  for (std::size_t k = 0; k < lam.plies.size(); ++k) {
    const PlyPolar ply = ply_polar(catalog.get(lam.plies[k].material));
    const double delta = lam.plies[k].angle;
    const KelvinMat q = cartesian_from_polar_4(rotate(ply.stiffness, delta), 0.0);
    const KelvinVec g = cartesian_from_polar_2(rotate(ply.thermal, delta), 0.0);
    s.A = s.A + w.w1[k] * q;
    s.B = s.B + w.w2[k] * q;
    s.D = s.D + w.w3[k] * q;
    s.U = s.U + w.w1[k] * g;
    s.V = s.V + w.w2[k] * g;
    s.W = s.W + w.w3[k] * g;
  }
  s.A_polar = polar_from_cartesian_4(s.A);
  s.B_polar = polar_from_cartesian_4(s.B);
  s.D_polar = polar_from_cartesian_4(s.D);
  s.U_polar = polar_from_cartesian_2(s.U);
  s.V_polar = polar_from_cartesian_2(s.V);
  s.W_polar = polar_from_cartesian_2(s.W);
  return s;
}

/// Dimensionless complex sums over the stack encoding orientations and
/// positions; defined for identical plies only.  Coefficient groups:
/// a_k = 1/n, b_k = (2k-n-1)/n^2, d_k = [12k(k-n-1)+4+3n(n+2)]/n^3 and
/// c_k = a_k - d_k.  Pairs (xi_{2j-1}, xi_{2j}) are (Re, Im) of the sums.
struct LaminationParams {
  std::complex<double> xiA4, xiA2;  // xi1+i xi2,  xi3+i xi4
  std::complex<double> xiB4, xiB2;  // xi5+i xi6,  xi7+i xi8
  std::complex<double> xiD4, xiD2;  // xi9+i xi10, xi11+i xi12
  std::complex<double> xiC4, xiC2;  // xi13+i xi14, xi15+i xi16

  /// 1-based accessor matching the xi_j numbering.
  double xi(int j) const {
    const std::complex<double>* g[] = {&xiA4, &xiA2, &xiB4, &xiB2, &xiD4, &xiD2, &xiC4, &xiC2};
    const std::complex<double>& z = *g[(j - 1) / 2];
    return (j % 2 == 1) ? z.real() : z.imag();
  }
};

/// Integer coefficient numerators; shared with the exact search predicates.
inline long long b_coef_num(int k, int n) { return 2LL * k - n - 1; }           // over n^2
inline long long d_coef_num(int k, int n) {                                     // over n^3
  return 12LL * k * (k - n - 1) + 4LL + 3LL * n * (n + 2);
}
inline long long c_coef_num(int k, int n) {                                     // over n^3
  return static_cast<long long>(n) * n - d_coef_num(k, n);
}

inline LaminationParams lamination_parameters(const Laminate& lam) {
  validate(lam);
  if (is_hybrid(lam))
    throw HybridLaminateError("lamination parameters are defined for identical plies only");
  const int n = static_cast<int>(lam.plies.size());
  const double n1 = n, n2 = n1 * n1, n3 = n2 * n1;
  LaminationParams lp;
  // Sums accumulate integer numerators times unit phases; the single division
  // by n, n^2 or n^3 happens at the end.
  for (int k = 1; k <= n; ++k) {
    const double delta = lam.plies[k - 1].angle;
    const std::complex<double> e2 = std::polar(1.0, 2.0 * delta);
    const std::complex<double> e4 = std::polar(1.0, 4.0 * delta);
    const double bk = static_cast<double>(b_coef_num(k, n));
    const double dk = static_cast<double>(d_coef_num(k, n));
    const double ck = static_cast<double>(c_coef_num(k, n));
    lp.xiA4 += e4;
    lp.xiA2 += e2;
    lp.xiB4 += bk * e4;
    lp.xiB2 += bk * e2;
    lp.xiD4 += dk * e4;
    lp.xiD2 += dk * e2;
    lp.xiC4 += ck * e4;
    lp.xiC2 += ck * e2;
  }
  lp.xiA4 /= n1;
  lp.xiA2 /= n1;
  lp.xiB4 /= n2;
  lp.xiB2 /= n2;
  lp.xiD4 /= n3;
  lp.xiD2 /= n3;
  lp.xiC4 /= n3;
  lp.xiC2 /= n3;
  return lp;
}

namespace detail {

struct Polar4Accum {
  double T0 = 0.0, T1 = 0.0;
  std::complex<double> z0, z1;

  void add(const PolarParams4& p, double delta, double weight) {
    T0 += weight * p.T0;
    T1 += weight * p.T1;
    z0 += weight * p.R0 * std::polar(1.0, 4.0 * (p.Phi0 + delta));
    z1 += weight * p.R1 * std::polar(1.0, 2.0 * (p.Phi1 + delta));
  }

  PolarParams4 finish() const {
    PolarParams4 p;
    p.T0 = T0;
    p.T1 = T1;
    p.R0 = std::abs(z0);
    p.R1 = std::abs(z1);
    p.phi0_defined = p.R0 != 0.0;
    p.phi1_defined = p.R1 != 0.0;
    p.Phi0 = p.phi0_defined ? 0.25 * std::arg(z0) : 0.0;
    p.Phi1 = p.phi1_defined ? 0.5 * std::arg(z1) : 0.0;
    normalize_angles(p);
    return p;
  }
};

struct Polar2Accum {
  double T = 0.0;
  std::complex<double> z;

  void add(const PolarParams2& p, double delta, double weight) {
    T += weight * p.T;
    z += weight * p.R * std::polar(1.0, 2.0 * (p.Phi + delta));
  }

  PolarParams2 finish() const {
    PolarParams2 p;
    p.T = T;
    p.R = std::abs(z);
    p.phi_defined = p.R != 0.0;
    p.Phi = p.phi_defined ? 0.5 * std::arg(z) : 0.0;
    normalize_angles(p);
    return p;
  }
};

inline PolarParams4 polar4_from_complex(double T0, double T1, std::complex<double> z0,
                                        std::complex<double> z1) {
  PolarParams4 p;
  p.T0 = T0;
  p.T1 = T1;
  p.R0 = std::abs(z0);
  p.R1 = std::abs(z1);
  p.phi0_defined = p.R0 != 0.0;
  p.phi1_defined = p.R1 != 0.0;
  p.Phi0 = p.phi0_defined ? 0.25 * std::arg(z0) : 0.0;
  p.Phi1 = p.phi1_defined ? 0.5 * std::arg(z1) : 0.0;
  normalize_angles(p);
  return p;
}

inline PolarParams2 polar2_from_complex(double T, std::complex<double> z) {
  PolarParams2 p;
  p.T = T;
  p.R = std::abs(z);
  p.phi_defined = p.R != 0.0;
  p.Phi = p.phi_defined ? 0.5 * std::arg(z) : 0.0;
  normalize_angles(p);
  return p;
}

}  // namespace detail

/// Polar homogenization route.  Identical-ply stacks go through the
/// lamination parameters; hybrids through the general weighted complex sums.
/// Agrees with stiffness_tensors to roundoff.
inline StiffnessSet polar_homogenize(const Laminate& lam, const MaterialCatalog& catalog) {
  StiffnessSet s;
  s.h = total_thickness(lam);
  if (!is_hybrid(lam)) {
    const PlyPolar ply = ply_polar(catalog.get(lam.plies.front().material));
    const LaminationParams lp = lamination_parameters(lam);
    const std::complex<double> q0 =
        ply.stiffness.R0 * std::polar(1.0, 4.0 * ply.stiffness.Phi0);
    const std::complex<double> q1 =
        ply.stiffness.R1 * std::polar(1.0, 2.0 * ply.stiffness.Phi1);
    const std::complex<double> g1 = ply.thermal.R * std::polar(1.0, 2.0 * ply.thermal.Phi);
    s.A_polar = detail::polar4_from_complex(ply.stiffness.T0, ply.stiffness.T1, q0 * lp.xiA4,
                                            q1 * lp.xiA2);
    s.B_polar = detail::polar4_from_complex(0.0, 0.0, q0 * lp.xiB4, q1 * lp.xiB2);
    s.D_polar = detail::polar4_from_complex(ply.stiffness.T0, ply.stiffness.T1, q0 * lp.xiD4,
                                            q1 * lp.xiD2);
    s.U_polar = detail::polar2_from_complex(ply.thermal.T, g1 * lp.xiA2);
    s.V_polar = detail::polar2_from_complex(0.0, g1 * lp.xiB2);
    s.W_polar = detail::polar2_from_complex(ply.thermal.T, g1 * lp.xiD2);
  } else {
    const auto w = detail::stack_weights(lam);
    detail::Polar4Accum A, B, D;
    detail::Polar2Accum U, V, W;
    for (std::size_t k = 0; k < lam.plies.size(); ++k) {
      const PlyPolar ply = ply_polar(catalog.get(lam.plies[k].material));
      const double delta = lam.plies[k].angle;
      A.add(ply.stiffness, delta, w.w1[k]);
      B.add(ply.stiffness, delta, w.w2[k]);
      D.add(ply.stiffness, delta, w.w3[k]);
      U.add(ply.thermal, delta, w.w1[k]);
      V.add(ply.thermal, delta, w.w2[k]);
      W.add(ply.thermal, delta, w.w3[k]);
    }
    s.A_polar = A.finish();
    s.B_polar = B.finish();
    s.D_polar = D.finish();
    s.U_polar = U.finish();
    s.V_polar = V.finish();
    s.W_polar = W.finish();
  }
  s.A = cartesian_from_polar_4(s.A_polar, 0.0);
  s.B = cartesian_from_polar_4(s.B_polar, 0.0);
  s.D = cartesian_from_polar_4(s.D_polar, 0.0);
  s.U = cartesian_from_polar_2(s.U_polar, 0.0);
  s.V = cartesian_from_polar_2(s.V_polar, 0.0);
  s.W = cartesian_from_polar_2(s.W_polar, 0.0);
  return s;
}

/// Homogeneity tensor C = A - D and its thermal counterpart Y = U - W.
/// C = O means the laminate behaves identically in extension and bending.
struct HomogeneityPair {
  KelvinMat C;
  KelvinVec Y;
  PolarParams4 C_polar;
  PolarParams2 Y_polar;
};

inline HomogeneityPair homogeneity_tensors(const StiffnessSet& s) {
  HomogeneityPair hp;
  hp.C = s.A - s.D;
  hp.Y = s.U - s.W;
  hp.C_polar = polar_from_cartesian_4(hp.C);
  hp.Y_polar = polar_from_cartesian_2(hp.Y);
  return hp;
}

}  // namespace polarlam
