// SPDX-License-Identifier: Apache-2.0
#pragma once

// Kelvin-convention storage of plane symmetric tensors and the small dense
// algebra used throughout.  A 2nd-rank symmetric tensor L is stored as
// (L11, L22, sqrt(2) L12); a 4th-rank tensor with minor symmetries as a 3x3
// matrix whose 16/26 entries carry sqrt(2) and whose 66 entry carries 2
// relative to the 4-index components.  With these factors matrix-vector
// products in the 3-space coincide with tensor contractions.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

#include "polarlam/errors.hpp"

namespace polarlam {

inline constexpr double kSqrt2 = 1.4142135623730951;

struct KelvinVec {
  double v1 = 0.0;
  double v2 = 0.0;
  double v6 = 0.0;  // sqrt(2) * (12-component)

  KelvinVec operator+(const KelvinVec& o) const { return {v1 + o.v1, v2 + o.v2, v6 + o.v6}; }
  KelvinVec operator-(const KelvinVec& o) const { return {v1 - o.v1, v2 - o.v2, v6 - o.v6}; }
  KelvinVec operator*(double s) const { return {v1 * s, v2 * s, v6 * s}; }
  KelvinVec operator-() const { return {-v1, -v2, -v6}; }
};

inline KelvinVec operator*(double s, const KelvinVec& v) { return v * s; }

inline double max_abs(const KelvinVec& v) {
  return std::max({std::fabs(v.v1), std::fabs(v.v2), std::fabs(v.v6)});
}

/// Symmetric 4th-rank plane tensor (major + minor symmetries).
struct KelvinMat {
  double m11 = 0.0, m12 = 0.0, m16 = 0.0;
  double m22 = 0.0, m26 = 0.0;
  double m66 = 0.0;

  KelvinMat operator+(const KelvinMat& o) const {
    return {m11 + o.m11, m12 + o.m12, m16 + o.m16, m22 + o.m22, m26 + o.m26, m66 + o.m66};
  }
  KelvinMat operator-(const KelvinMat& o) const {
    return {m11 - o.m11, m12 - o.m12, m16 - o.m16, m22 - o.m22, m26 - o.m26, m66 - o.m66};
  }
  KelvinMat operator*(double s) const {
    return {m11 * s, m12 * s, m16 * s, m22 * s, m26 * s, m66 * s};
  }
};

inline KelvinMat operator*(double s, const KelvinMat& m) { return m * s; }

inline KelvinVec operator*(const KelvinMat& m, const KelvinVec& x) {
  return {m.m11 * x.v1 + m.m12 * x.v2 + m.m16 * x.v6,
          m.m12 * x.v1 + m.m22 * x.v2 + m.m26 * x.v6,
          m.m16 * x.v1 + m.m26 * x.v2 + m.m66 * x.v6};
}

inline double max_abs(const KelvinMat& m) {
  return std::max({std::fabs(m.m11), std::fabs(m.m12), std::fabs(m.m16), std::fabs(m.m22),
                   std::fabs(m.m26), std::fabs(m.m66)});
}

/// 4th-rank plane tensor with minor symmetries only (no major symmetry);
/// arises as the compliance coupling block of a laminate.
struct KelvinMatAsym {
  double m11 = 0.0, m12 = 0.0, m16 = 0.0;
  double m21 = 0.0, m22 = 0.0, m26 = 0.0;
  double m61 = 0.0, m62 = 0.0, m66 = 0.0;

  KelvinMatAsym transposed() const { return {m11, m21, m61, m12, m22, m62, m16, m26, m66}; }

  KelvinMatAsym operator-(const KelvinMatAsym& o) const {
    return {m11 - o.m11, m12 - o.m12, m16 - o.m16, m21 - o.m21, m22 - o.m22,
            m26 - o.m26, m61 - o.m61, m62 - o.m62, m66 - o.m66};
  }
};

inline KelvinVec operator*(const KelvinMatAsym& m, const KelvinVec& x) {
  return {m.m11 * x.v1 + m.m12 * x.v2 + m.m16 * x.v6,
          m.m21 * x.v1 + m.m22 * x.v2 + m.m26 * x.v6,
          m.m61 * x.v1 + m.m62 * x.v2 + m.m66 * x.v6};
}

/// Product with the transpose without forming it.
inline KelvinVec transpose_mul(const KelvinMatAsym& m, const KelvinVec& x) {
  return {m.m11 * x.v1 + m.m21 * x.v2 + m.m61 * x.v6,
          m.m12 * x.v1 + m.m22 * x.v2 + m.m62 * x.v6,
          m.m16 * x.v1 + m.m26 * x.v2 + m.m66 * x.v6};
}

inline double max_abs(const KelvinMatAsym& m) {
  return std::max({std::fabs(m.m11), std::fabs(m.m12), std::fabs(m.m16), std::fabs(m.m21),
                   std::fabs(m.m22), std::fabs(m.m26), std::fabs(m.m61), std::fabs(m.m62),
                   std::fabs(m.m66)});
}

/// Plain row-major 3x3 used for the intermediate products of the block
/// inversion formulas (products of symmetric matrices are not symmetric).
struct Mat3 {
  std::array<std::array<double, 3>, 3> e{};

  static Mat3 identity() {
    Mat3 r;
    r.e[0][0] = r.e[1][1] = r.e[2][2] = 1.0;
    return r;
  }
};

inline Mat3 to_mat3(const KelvinMat& m) {
  Mat3 r;
  r.e = {{{m.m11, m.m12, m.m16}, {m.m12, m.m22, m.m26}, {m.m16, m.m26, m.m66}}};
  return r;
}

inline Mat3 to_mat3(const KelvinMatAsym& m) {
  Mat3 r;
  r.e = {{{m.m11, m.m12, m.m16}, {m.m21, m.m22, m.m26}, {m.m61, m.m62, m.m66}}};
  return r;
}

/// Symmetrizes roundoff noise; the argument is mathematically symmetric.
inline KelvinMat to_kelvin_sym(const Mat3& m) {
  return {m.e[0][0], 0.5 * (m.e[0][1] + m.e[1][0]), 0.5 * (m.e[0][2] + m.e[2][0]),
          m.e[1][1], 0.5 * (m.e[1][2] + m.e[2][1]), m.e[2][2]};
}

inline KelvinMatAsym to_kelvin_asym(const Mat3& m) {
  return {m.e[0][0], m.e[0][1], m.e[0][2], m.e[1][0], m.e[1][1],
          m.e[1][2], m.e[2][0], m.e[2][1], m.e[2][2]};
}

inline Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r.e[i][j] = a.e[i][0] * b.e[0][j] + a.e[i][1] * b.e[1][j] + a.e[i][2] * b.e[2][j];
  return r;
}

inline Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.e[i][j] = a.e[i][j] - b.e[i][j];
  return r;
}

inline Mat3 operator*(double s, const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.e[i][j] = s * a.e[i][j];
  return r;
}

inline double max_abs(const Mat3& m) {
  double r = 0.0;
  for (const auto& row : m.e)
    for (double x : row) r = std::max(r, std::fabs(x));
  return r;
}

/// Closed-form adjugate inverse.  `block` names the offending matrix in the
/// SingularBlockError raised when |det| falls below 1e-30 * scale^3.
inline Mat3 inverse(const Mat3& m, const std::string& block) {
  const auto& a = m.e;
  const double c00 = a[1][1] * a[2][2] - a[1][2] * a[2][1];
  const double c01 = a[1][2] * a[2][0] - a[1][0] * a[2][2];
  const double c02 = a[1][0] * a[2][1] - a[1][1] * a[2][0];
  const double det = a[0][0] * c00 + a[0][1] * c01 + a[0][2] * c02;
  const double scale = max_abs(m);
  if (std::fabs(det) <= 1e-30 * scale * scale * scale || det == 0.0)
    throw SingularBlockError(block);
  const double inv_det = 1.0 / det;
  Mat3 r;
  r.e[0][0] = c00 * inv_det;
  r.e[1][0] = c01 * inv_det;
  r.e[2][0] = c02 * inv_det;
  r.e[0][1] = (a[0][2] * a[2][1] - a[0][1] * a[2][2]) * inv_det;
  r.e[1][1] = (a[0][0] * a[2][2] - a[0][2] * a[2][0]) * inv_det;
  r.e[2][1] = (a[0][1] * a[2][0] - a[0][0] * a[2][1]) * inv_det;
  r.e[0][2] = (a[0][1] * a[1][2] - a[0][2] * a[1][1]) * inv_det;
  r.e[1][2] = (a[0][2] * a[1][0] - a[0][0] * a[1][2]) * inv_det;
  r.e[2][2] = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) * inv_det;
  return r;
}

inline Mat3 inverse(const KelvinMat& m, const std::string& block) {
  return inverse(to_mat3(m), block);
}

}  // namespace polarlam
