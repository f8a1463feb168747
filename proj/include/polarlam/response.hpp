// SPDX-License-Identifier: Apache-2.0
#pragma once

// Deformation under mechanical and thermal loads, and the constant-curvature
// geometry of the deformed midplane.  Forward law (internal actions from
// strains) and inverse law (strains from actions) are mutual inverses at a
// fixed thermal load.

#include <cmath>
#include <utility>
#include <vector>

#include "polarlam/compliance.hpp"

namespace polarlam {

struct ThermalLoad {
  double t = 0.0;       // degC, uniform change
  double grad_t = 0.0;  // degC/mm, through-thickness gradient
};

struct Response {
  KelvinVec eps;      // midplane strain
  KelvinVec kappa;    // curvature, 1/mm
  double K_gauss = 0.0;   // 1/mm^2
  double H_mean = 0.0;    // 1/mm
  double kappa_I = 0.0;   // principal curvatures
  double kappa_II = 0.0;
};

namespace detail {

inline void fill_curvature_geometry(Response& r) {
  // 2x2 curvature tensor rebuilt from Kelvin components.
  const double k12 = r.kappa.v6 / kSqrt2;
  const double mean = 0.5 * (r.kappa.v1 + r.kappa.v2);
  const double dev = std::hypot(0.5 * (r.kappa.v1 - r.kappa.v2), k12);
  r.H_mean = mean;
  r.kappa_I = mean + dev;
  r.kappa_II = mean - dev;
  r.K_gauss = r.kappa.v1 * r.kappa.v2 - k12 * k12;
}

}  // namespace detail

/// eps = (1/h) a N + (2/h^2) b M + t u + grad_t v2
/// kappa = (2/h^2) b^T N + (12/h^3) d M + t v1 + grad_t w
inline Response deform(const StiffnessSet& s, const ComplianceSet& c, const KelvinVec& N,
                       const KelvinVec& M, const ThermalLoad& load) {
  const double h = s.h;
  Response r;
  r.eps = (1.0 / h) * (c.a * N) + (2.0 / (h * h)) * (c.b * M) + load.t * c.u +
          load.grad_t * c.v2;
  r.kappa = (2.0 / (h * h)) * transpose_mul(c.b, N) + (12.0 / (h * h * h)) * (c.d * M) +
            load.t * c.v1 + load.grad_t * c.w;
  detail::fill_curvature_geometry(r);
  return r;
}

/// N = h A eps + (h^2/2) B kappa - t h U - grad_t (h^2/2) V
/// M = (h^2/2) B eps + (h^3/12) D kappa - t (h^2/2) V - grad_t (h^3/12) W
inline std::pair<KelvinVec, KelvinVec> internal_actions(const StiffnessSet& s,
                                                        const KelvinVec& eps,
                                                        const KelvinVec& kappa,
                                                        const ThermalLoad& load) {
  const double h = s.h;
  const KelvinVec N = h * (s.A * eps) + 0.5 * h * h * (s.B * kappa) - load.t * h * s.U -
                      load.grad_t * 0.5 * h * h * s.V;
  const KelvinVec M = 0.5 * h * h * (s.B * eps) + h * h * h / 12.0 * (s.D * kappa) -
                      load.t * 0.5 * h * h * s.V - load.grad_t * h * h * h / 12.0 * s.W;
  return {N, M};
}

struct SurfacePoint {
  double x = 0.0, y = 0.0, z = 0.0;  // mm
};

/// Constant-curvature quadratic midplane over a centered rectangle:
/// z(x, y) = -1/2 (kappa1 x^2 + kappa2 y^2 + sqrt(2) kappa6 x y).
/// Positive curvature bends downward by this sign convention.
inline std::vector<SurfacePoint> surface_sample(const Response& resp, double side_x,
                                                double side_y, int grid) {
  if (grid < 2) throw ValidationError("surface grid must have at least 2 points per side");
  std::vector<SurfacePoint> pts;
  pts.reserve(static_cast<std::size_t>(grid) * grid);
  for (int i = 0; i < grid; ++i) {
    const double x = -0.5 * side_x + side_x * i / (grid - 1);
    for (int j = 0; j < grid; ++j) {
      const double y = -0.5 * side_y + side_y * j / (grid - 1);
      const double z = -0.5 * (resp.kappa.v1 * x * x + resp.kappa.v2 * y * y +
                               kSqrt2 * resp.kappa.v6 * x * y);
      pts.push_back({x, y, z});
    }
  }
  return pts;
}

}  // namespace polarlam
