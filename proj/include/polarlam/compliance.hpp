// SPDX-License-Identifier: Apache-2.0
#pragma once

// Inversion of the laminate constitutive law.  The elastic compliances come
// from the Schur-complement block formulas
//   a = (A - 3 B D^-1 B)^-1,  b = -3 a B D^-1,  d = (D - 3 B A^-1 B)^-1,
// the thermal ones from
//   u  = a U + b V              v1 = (2/h)(b^T U + 3 d V)
//   v2 = (h/6)(3 a V + b W)     w  = b^T V + d W.
// A dense 6x6 inversion of the assembled law acts as the independent
// verification route (tests and the --verify flag only).

#include <array>
#include <cmath>
#include <string>

#include "polarlam/laminate.hpp"

namespace polarlam {

struct ElasticCompliance {
  KelvinMat a, d;     // 1/MPa
  KelvinMatAsym b;    // 1/MPa
};

struct ThermalCompliance {
  KelvinVec u;   // 1/degC
  KelvinVec v1;  // 1/(degC mm)
  KelvinVec v2;  // mm/degC
  KelvinVec w;   // 1/degC
};

inline ElasticCompliance compliance_elastic(const StiffnessSet& s) {
  const Mat3 A = to_mat3(s.A), B = to_mat3(s.B), D = to_mat3(s.D);
  const Mat3 Dinv = inverse(D, "D");
  const Mat3 Ainv = inverse(A, "A");
  const Mat3 schurA = A - 3.0 * (B * (Dinv * B));
  const Mat3 schurD = D - 3.0 * (B * (Ainv * B));
  ElasticCompliance c;
  const Mat3 a = inverse(to_mat3(to_kelvin_sym(schurA)), "A - 3 B D^-1 B");
  const Mat3 d = inverse(to_mat3(to_kelvin_sym(schurD)), "D - 3 B A^-1 B");
  c.a = to_kelvin_sym(a);
  c.d = to_kelvin_sym(d);
  c.b = to_kelvin_asym(-3.0 * (a * (B * Dinv)));
  return c;
}

inline ThermalCompliance compliance_thermal(const StiffnessSet& s, const ElasticCompliance& c) {
  ThermalCompliance t;
  t.u = c.a * s.U + c.b * s.V;
  t.v1 = (2.0 / s.h) * (transpose_mul(c.b, s.U) + 3.0 * (c.d * s.V));
  t.v2 = (s.h / 6.0) * (3.0 * (c.a * s.V) + c.b * s.W);
  t.w = transpose_mul(c.b, s.V) + c.d * s.W;
  return t;
}

/// Everything the inverse law needs, with polar forms attached.
struct ComplianceSet {
  KelvinMat a, d;
  KelvinMatAsym b;
  KelvinVec u, v1, v2, w;
  double h = 0.0;
  PolarParams4 a_polar, d_polar;
  PolarParamsB9 b_polar;
  PolarParams2 u_polar, v1_polar, v2_polar, w_polar;
};

inline ComplianceSet invert(const StiffnessSet& s) {
  const ElasticCompliance e = compliance_elastic(s);
  const ThermalCompliance t = compliance_thermal(s, e);
  ComplianceSet c;
  c.a = e.a;
  c.b = e.b;
  c.d = e.d;
  c.u = t.u;
  c.v1 = t.v1;
  c.v2 = t.v2;
  c.w = t.w;
  c.h = s.h;
  c.a_polar = polar_from_cartesian_4(c.a);
  c.d_polar = polar_from_cartesian_4(c.d);
  c.b_polar = polar_from_cartesian_B(c.b);
  c.u_polar = polar_from_cartesian_2(c.u);
  c.v1_polar = polar_from_cartesian_2(c.v1);
  c.v2_polar = polar_from_cartesian_2(c.v2);
  c.w_polar = polar_from_cartesian_2(c.w);
  return c;
}

namespace detail {

using Mat6 = std::array<std::array<double, 6>, 6>;
using Vec6 = std::array<double, 6>;

/// Gauss-Jordan with partial pivoting; returns the inverse.
inline Mat6 invert6(Mat6 m) {
  Mat6 inv{};
  for (int i = 0; i < 6; ++i) inv[i][i] = 1.0;
  for (int col = 0; col < 6; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 6; ++r)
      if (std::fabs(m[r][col]) > std::fabs(m[pivot][col])) pivot = r;
    if (m[pivot][col] == 0.0) throw SingularBlockError("assembled 6x6 stiffness");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const double scale = 1.0 / m[col][col];
    for (int j = 0; j < 6; ++j) {
      m[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (int r = 0; r < 6; ++r) {
      if (r == col) continue;
      const double f = m[r][col];
      if (f == 0.0) continue;
      for (int j = 0; j < 6; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

/// Assembles the 6x6 matrix of the constitutive law, with its h prefactors.
inline Mat6 assemble_stiffness(const StiffnessSet& s) {
  const Mat3 A = to_mat3(s.A), B = to_mat3(s.B), D = to_mat3(s.D);
  const double h = s.h;
  Mat6 K{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      K[i][j] = h * A.e[i][j];
      K[i][j + 3] = 0.5 * h * h * B.e[i][j];
      K[i + 3][j] = 0.5 * h * h * B.e[i][j];
      K[i + 3][j + 3] = h * h * h / 12.0 * D.e[i][j];
    }
  return K;
}

}  // namespace detail

/// Independent route: dense inversion of the assembled law.  The compliance
/// blocks fall out of the inverse matrix; the thermal compliances are the
/// responses to unit uniform and unit gradient temperature loads.
struct OracleResult {
  KelvinMat a, d;
  KelvinMatAsym b;
  KelvinVec u, v1, v2, w;
};

inline OracleResult full_inverse_oracle(const StiffnessSet& s) {
  const detail::Mat6 K = detail::assemble_stiffness(s);
  const detail::Mat6 S = detail::invert6(K);
  const double h = s.h;
  OracleResult r;
  Mat3 a, b, d;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      a.e[i][j] = h * S[i][j];
      b.e[i][j] = 0.5 * h * h * S[i][j + 3];
      d.e[i][j] = h * h * h / 12.0 * S[i + 3][j + 3];
    }
  r.a = to_kelvin_sym(a);
  r.b = to_kelvin_asym(b);
  r.d = to_kelvin_sym(d);

  // Unit-t load vector (h U, h^2/2 V) and unit-grad load (h^2/2 V, h^3/12 W).
  const auto solve = [&](const KelvinVec& top, const KelvinVec& bot) {
    const detail::Vec6 rhs = {top.v1, top.v2, top.v6, bot.v1, bot.v2, bot.v6};
    detail::Vec6 x{};
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) x[i] += S[i][j] * rhs[j];
    return std::pair<KelvinVec, KelvinVec>{{x[0], x[1], x[2]}, {x[3], x[4], x[5]}};
  };
  const auto [u, v1] = solve(h * s.U, 0.5 * h * h * s.V);
  const auto [v2, w] = solve(0.5 * h * h * s.V, h * h * h / 12.0 * s.W);
  r.u = u;
  r.v1 = v1;
  r.v2 = v2;
  r.w = w;
  return r;
}

namespace detail {

inline double rel_dev(double x, double y, double scale) {
  return scale > 0.0 ? std::fabs(x - y) / scale : std::fabs(x - y);
}

inline double rel_dev(const KelvinVec& x, const KelvinVec& y, double scale) {
  return max_abs(x - y) / (scale > 0.0 ? scale : 1.0);
}

}  // namespace detail

/// Max relative deviation between the block formulas and the dense route.
inline double oracle_max_deviation(const StiffnessSet& s, const ComplianceSet& c) {
  const OracleResult o = full_inverse_oracle(s);
  double dev = 0.0;
  const double ea = std::max(max_abs(c.a), std::max(max_abs(c.d), max_abs(c.b)));
  dev = std::max(dev, max_abs(c.a - o.a) / ea);
  dev = std::max(dev, max_abs(c.b - o.b) / ea);
  dev = std::max(dev, max_abs(c.d - o.d) / ea);
  dev = std::max(dev, detail::rel_dev(c.u, o.u, std::max(max_abs(c.u), max_abs(o.u))));
  dev = std::max(dev, detail::rel_dev(c.v1, o.v1, std::max(max_abs(c.v1), max_abs(o.v1))));
  dev = std::max(dev, detail::rel_dev(c.v2, o.v2, std::max(max_abs(c.v2), max_abs(o.v2))));
  dev = std::max(dev, detail::rel_dev(c.w, o.w, std::max(max_abs(c.w), max_abs(o.w))));
  return dev;
}

/// The thermal compliances have two equivalent algebraic forms; any mismatch
/// beyond roundoff is surfaced as a diagnostic, never silently preferred.
inline double thermal_form_deviation(const StiffnessSet& s, const ComplianceSet& c) {
  const Mat3 A = to_mat3(s.A), B = to_mat3(s.B), D = to_mat3(s.D);
  const Mat3 Dinv = inverse(D, "D");
  const Mat3 Ainv = inverse(A, "A");
  const Mat3 a = to_mat3(c.a), d = to_mat3(c.d);
  const auto mul = [](const Mat3& m, const KelvinVec& v) {
    return KelvinVec{m.e[0][0] * v.v1 + m.e[0][1] * v.v2 + m.e[0][2] * v.v6,
                     m.e[1][0] * v.v1 + m.e[1][1] * v.v2 + m.e[1][2] * v.v6,
                     m.e[2][0] * v.v1 + m.e[2][1] * v.v2 + m.e[2][2] * v.v6};
  };
  const KelvinVec u2 = mul(a, s.U - 3.0 * mul(B, mul(Dinv, s.V)));
  const KelvinVec v1_2 = (6.0 / s.h) * mul(d, s.V - mul(B, mul(Ainv, s.U)));
  const KelvinVec v2_2 = 0.5 * s.h * mul(a, s.V - mul(B, mul(Dinv, s.W)));
  const KelvinVec w2 = mul(d, s.W - 3.0 * mul(B, mul(Ainv, s.V)));
  double dev = 0.0;
  dev = std::max(dev, detail::rel_dev(c.u, u2, std::max(max_abs(c.u), max_abs(u2))));
  dev = std::max(dev, detail::rel_dev(c.v1, v1_2, std::max(max_abs(c.v1), max_abs(v1_2))));
  dev = std::max(dev, detail::rel_dev(c.v2, v2_2, std::max(max_abs(c.v2), max_abs(v2_2))));
  dev = std::max(dev, detail::rel_dev(c.w, w2, std::max(max_abs(c.w), max_abs(w2))));
  return dev;
}

/// Residual of the identity tying v2 to v1:
/// v2 = (h^2/12) a [ d^-1 v1 + (6/h) B (A^-1 U - D^-1 W) ].
inline double coupling_identity_deviation(const StiffnessSet& s, const ComplianceSet& c) {
  const Mat3 B = to_mat3(s.B);
  const Mat3 Ainv = inverse(s.A, "A");
  const Mat3 Dinv = inverse(s.D, "D");
  const Mat3 dinv = inverse(c.d, "d");
  const Mat3 a = to_mat3(c.a);
  const auto mul = [](const Mat3& m, const KelvinVec& v) {
    return KelvinVec{m.e[0][0] * v.v1 + m.e[0][1] * v.v2 + m.e[0][2] * v.v6,
                     m.e[1][0] * v.v1 + m.e[1][1] * v.v2 + m.e[1][2] * v.v6,
                     m.e[2][0] * v.v1 + m.e[2][1] * v.v2 + m.e[2][2] * v.v6};
  };
  const KelvinVec inner =
      mul(dinv, c.v1) + (6.0 / s.h) * mul(B, mul(Ainv, s.U) - mul(Dinv, s.W));
  const KelvinVec rhs = (s.h * s.h / 12.0) * mul(a, inner);
  return detail::rel_dev(c.v2, rhs, std::max(max_abs(c.v2), max_abs(rhs)));
}

/// b = -3 A^-1 B d, the alternative factorization of the coupling block.
inline double coupling_block_identity_deviation(const StiffnessSet& s, const ComplianceSet& c) {
  const Mat3 Ainv = inverse(s.A, "A");
  const Mat3 alt = -3.0 * (Ainv * (to_mat3(s.B) * to_mat3(c.d)));
  const double scale = std::max(max_abs(c.b), max_abs(alt));
  return max_abs(c.b - to_kelvin_asym(alt)) / (scale > 0.0 ? scale : 1.0);
}

}  // namespace polarlam
