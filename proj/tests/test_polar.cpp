// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace polarlam;
using test_support::make_rng;
using test_support::random_polar4;
using test_support::random_polarB9;
using test_support::uniform;

namespace {

void check_mat_close(const KelvinMat& a, const KelvinMat& b, double tol, double scale) {
  CHECK(std::fabs(a.m11 - b.m11) <= tol * scale);
  CHECK(std::fabs(a.m12 - b.m12) <= tol * scale);
  CHECK(std::fabs(a.m16 - b.m16) <= tol * scale);
  CHECK(std::fabs(a.m22 - b.m22) <= tol * scale);
  CHECK(std::fabs(a.m26 - b.m26) <= tol * scale);
  CHECK(std::fabs(a.m66 - b.m66) <= tol * scale);
}

}  // namespace

TEST_CASE("4th-rank polar extraction: isotropic input") {
  KelvinMat m;
  m.m11 = m.m22 = 3.0;
  m.m12 = 1.0;
  m.m66 = 2.0;
  const PolarParams4 p = polar_from_cartesian_4(m);
  CHECK(p.T0 == Catch::Approx(1.0));
  CHECK(p.T1 == Catch::Approx(1.0));
  CHECK(p.R0 == Catch::Approx(0.0).margin(1e-15));
  CHECK(p.R1 == Catch::Approx(0.0).margin(1e-15));
  CHECK_FALSE(p.phi0_defined);
  CHECK_FALSE(p.phi1_defined);
}

TEST_CASE("4th-rank reconstruction: isotropic part only") {
  PolarParams4 p;
  p.T0 = 1.0;
  p.T1 = 1.0;
  for (double theta : {0.0, 0.3, -1.2, kPi / 2}) {
    const KelvinMat m = cartesian_from_polar_4(p, theta);
    CHECK(m.m11 == Catch::Approx(3.0));
    CHECK(m.m12 == Catch::Approx(1.0));
    CHECK(m.m66 == Catch::Approx(2.0));
    CHECK(m.m16 == Catch::Approx(0.0).margin(1e-15));
    CHECK(m.m26 == Catch::Approx(0.0).margin(1e-15));
  }
}

TEST_CASE("4th-rank reconstruction is pi-periodic") {
  auto rng = make_rng(101);
  for (int i = 0; i < 50; ++i) {
    const PolarParams4 p = random_polar4(rng);
    const double theta = uniform(rng, -2.0, 2.0);
    const KelvinMat m1 = cartesian_from_polar_4(p, theta);
    const KelvinMat m2 = cartesian_from_polar_4(p, theta + kPi);
    const double scale = p.T0 + 2.0 * p.T1 + p.R0 + 4.0 * p.R1;
    check_mat_close(m1, m2, 1e-14, scale);
  }
}

TEST_CASE("4th-rank polar round trip over random parameters") {
  auto rng = make_rng(102);
  for (int i = 0; i < 1000; ++i) {
    const PolarParams4 p = random_polar4(rng);
    const PolarParams4 q = polar_from_cartesian_4(cartesian_from_polar_4(p, 0.0));
    const double scale = p.T0 + 2.0 * p.T1;
    INFO("sample " << i);
    REQUIRE(std::fabs(q.T0 - p.T0) <= 1e-12 * scale);
    REQUIRE(std::fabs(q.T1 - p.T1) <= 1e-12 * scale);
    REQUIRE(std::fabs(q.R0 - p.R0) <= 1e-12 * scale);
    REQUIRE(std::fabs(q.R1 - p.R1) <= 1e-12 * scale);
    REQUIRE(std::fabs(q.Phi0 - p.Phi0) <= 1e-11);
    REQUIRE(std::fabs(q.Phi1 - p.Phi1) <= 1e-11);
  }
}

TEST_CASE("4th-rank Cartesian round trip through polar form") {
  auto rng = make_rng(103);
  for (int i = 0; i < 1000; ++i) {
    KelvinMat m;
    m.m11 = uniform(rng, -3.0, 8.0);
    m.m12 = uniform(rng, -3.0, 3.0);
    m.m16 = uniform(rng, -3.0, 3.0);
    m.m22 = uniform(rng, -3.0, 8.0);
    m.m26 = uniform(rng, -3.0, 3.0);
    m.m66 = uniform(rng, -3.0, 6.0);
    const KelvinMat back = cartesian_from_polar_4(polar_from_cartesian_4(m), 0.0);
    check_mat_close(back, m, 1e-12, 8.0);
  }
}

TEST_CASE("2nd-rank polar: worked vectors") {
  const PolarParams2 iso = polar_from_cartesian_2({15.1, 15.1, 0.0});
  CHECK(iso.T == Catch::Approx(15.1));
  CHECK(iso.R == Catch::Approx(0.0).margin(1e-15));
  CHECK_FALSE(iso.phi_defined);

  const PolarParams2 dev = polar_from_cartesian_2({4.11, -4.11, 0.0});
  CHECK(dev.T == Catch::Approx(0.0).margin(1e-15));
  CHECK(dev.R == Catch::Approx(4.11));
  CHECK(dev.Phi == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("2nd-rank polar: random isotropic input has R = 0") {
  auto rng = make_rng(104);
  for (int i = 0; i < 100; ++i) {
    const double a = uniform(rng, -5.0, 5.0);
    const PolarParams2 p = polar_from_cartesian_2({a, a, 0.0});
    CHECK(p.T == Catch::Approx(a).margin(1e-15));
    CHECK(p.R == Catch::Approx(0.0).margin(1e-15));
  }
}

TEST_CASE("2nd-rank round trip at theta = 0") {
  auto rng = make_rng(105);
  for (int i = 0; i < 500; ++i) {
    const KelvinVec v{uniform(rng, -4.0, 4.0), uniform(rng, -4.0, 4.0),
                      uniform(rng, -4.0, 4.0)};
    const KelvinVec back = cartesian_from_polar_2(polar_from_cartesian_2(v), 0.0);
    CHECK(std::fabs(back.v1 - v.v1) <= 1e-12 * 4.0);
    CHECK(std::fabs(back.v2 - v.v2) <= 1e-12 * 4.0);
    CHECK(std::fabs(back.v6 - v.v6) <= 1e-12 * 4.0);
  }
}

TEST_CASE("nine-parameter form: major-symmetric input collapses") {
  // Diagonal coupling compliance of an antisymmetric cross-ply, in 1/MPa.
  KelvinMatAsym b{};
  b.m11 = 3.47e-5;
  b.m22 = -3.47e-5;
  const PolarParamsB9 p = polar_from_cartesian_B(b);
  CHECK(p.t3 == Catch::Approx(0.0).margin(1e-20));
  CHECK(p.r1 == Catch::Approx(p.r2).epsilon(1e-12));
  CHECK(std::fabs(detail::wrap_angle(p.phi1 - p.phi2, kPi)) < 1e-12);
  CHECK(p.t0 == Catch::Approx(0.0).margin(1e-20));
  CHECK(p.t1 == Catch::Approx(0.0).margin(1e-20));

  // Collapse onto the symmetric 4-parameter form: T0 = t0, T1 = t1,
  // R1 = r1 = r2 with the same phase.
  KelvinMat sym{b.m11, b.m12, b.m16, b.m22, b.m26, b.m66};
  const PolarParams4 q = polar_from_cartesian_4(sym);
  CHECK(q.T0 == Catch::Approx(p.t0).margin(1e-20));
  CHECK(q.T1 == Catch::Approx(p.t1).margin(1e-20));
  CHECK(q.R0 == Catch::Approx(p.r0).margin(1e-20));
  CHECK(q.R1 == Catch::Approx(p.r1).epsilon(1e-12));
}

TEST_CASE("nine-parameter form: zero matrix") {
  const PolarParamsB9 p = polar_from_cartesian_B(KelvinMatAsym{});
  CHECK(p.t0 == 0.0);
  CHECK(p.t1 == 0.0);
  CHECK(p.t3 == 0.0);
  CHECK(p.r0 == 0.0);
  CHECK(p.r1 == 0.0);
  CHECK(p.r2 == 0.0);
  CHECK_FALSE(p.phi0_defined);
  CHECK_FALSE(p.phi1_defined);
  CHECK_FALSE(p.phi2_defined);
}

TEST_CASE("nine-parameter round trip over random asymmetric matrices") {
  auto rng = make_rng(106);
  for (int i = 0; i < 1000; ++i) {
    const PolarParamsB9 p = random_polarB9(rng);
    const PolarParamsB9 q = polar_from_cartesian_B(cartesian_from_polar_B(p, 0.0));
    INFO("sample " << i);
    REQUIRE(std::fabs(q.t0 - p.t0) <= 1e-12 * 10.0);
    REQUIRE(std::fabs(q.t1 - p.t1) <= 1e-12 * 10.0);
    REQUIRE(std::fabs(q.t3 - p.t3) <= 1e-12 * 10.0);
    REQUIRE(std::fabs(q.r0 - p.r0) <= 1e-12 * 10.0);
    REQUIRE(std::fabs(q.r1 - p.r1) <= 1e-12 * 10.0);
    REQUIRE(std::fabs(q.r2 - p.r2) <= 1e-12 * 10.0);
    REQUIRE(std::fabs(q.phi0 - p.phi0) <= 1e-11);
    REQUIRE(std::fabs(q.phi1 - p.phi1) <= 1e-11);
    REQUIRE(std::fabs(q.phi2 - p.phi2) <= 1e-11);
  }
}

TEST_CASE("rotation by pi leaves Cartesian components unchanged") {
  auto rng = make_rng(107);
  for (int i = 0; i < 100; ++i) {
    const PolarParams4 p = random_polar4(rng);
    const KelvinMat m0 = cartesian_from_polar_4(p, 0.0);
    const KelvinMat m1 = cartesian_from_polar_4(rotate(p, kPi), 0.0);
    check_mat_close(m0, m1, 1e-13, p.T0 + 2.0 * p.T1 + p.R0 + 4.0 * p.R1);
  }
}

TEST_CASE("rotation shifts evaluation direction") {
  auto rng = make_rng(108);
  for (int i = 0; i < 100; ++i) {
    const PolarParams4 p = random_polar4(rng);
    const double delta = uniform(rng, -1.5, 1.5);
    // rotate(p, delta) at theta == p at theta - delta
    const double theta = uniform(rng, -1.5, 1.5);
    const KelvinMat m1 = cartesian_from_polar_4(rotate(p, delta), theta);
    const KelvinMat m2 = cartesian_from_polar_4(p, theta - delta);
    check_mat_close(m1, m2, 1e-13, p.T0 + 2.0 * p.T1 + p.R0 + 4.0 * p.R1);
  }
}

TEST_CASE("quarter-turn rotation swaps the 11 and 22 components") {
  auto rng = make_rng(109);
  const PolarParams4 p = random_polar4(rng);
  const KelvinMat m = cartesian_from_polar_4(p, 0.0);
  const KelvinMat r = cartesian_from_polar_4(rotate(p, kPi / 2), 0.0);
  const double scale = p.T0 + 2.0 * p.T1 + p.R0 + 4.0 * p.R1;
  CHECK(std::fabs(r.m11 - m.m22) <= 1e-13 * scale);
  CHECK(std::fabs(r.m22 - m.m11) <= 1e-13 * scale);
  CHECK(std::fabs(r.m12 - m.m12) <= 1e-13 * scale);
  CHECK(std::fabs(r.m66 - m.m66) <= 1e-13 * scale);
}

TEST_CASE("2nd-rank rotation adds to the polar angle") {
  PolarParams2 p;
  p.T = 2.0;
  p.R = 1.0;
  p.Phi = 0.3;
  const PolarParams2 r = rotate(p, 0.5);
  CHECK(r.T == p.T);
  CHECK(r.R == p.R);
  CHECK(r.Phi == Catch::Approx(0.8));
}

TEST_CASE("moduli and angle difference are rotation invariants") {
  auto rng = make_rng(110);
  for (int i = 0; i < 200; ++i) {
    const PolarParams4 p = random_polar4(rng);
    const PolarParams4 r = rotate(p, uniform(rng, -3.0, 3.0));
    REQUIRE(std::fabs(r.T0 - p.T0) <= 1e-12 * p.T0);
    REQUIRE(std::fabs(r.T1 - p.T1) <= 1e-12 * p.T1);
    REQUIRE(std::fabs(r.R0 - p.R0) <= 1e-12 * (p.R0 + 1.0));
    REQUIRE(std::fabs(r.R1 - p.R1) <= 1e-12 * (p.R1 + 1.0));
    const double d0 = detail::wrap_angle((r.Phi0 - r.Phi1) - (p.Phi0 - p.Phi1), 0.5 * kPi);
    REQUIRE(std::fabs(d0) <= 1e-12);
  }
}

TEST_CASE("purely anisotropic tensors average to zero over all directions") {
  auto rng = make_rng(111);
  // A uniform N-point grid integrates trigonometric polynomials of degree
  // < N exactly; the components have degree 4.
  constexpr int N = 16;
  for (int i = 0; i < 50; ++i) {
    PolarParams4 p = random_polar4(rng);
    p.T0 = 0.0;
    p.T1 = 0.0;
    KelvinMat acc{};
    for (int k = 0; k < N; ++k)
      acc = acc + cartesian_from_polar_4(p, 2.0 * kPi * k / N) * (1.0 / N);
    const double scale = p.R0 + 4.0 * p.R1;
    CHECK(max_abs(acc) <= 1e-10 * scale);
  }
}

TEST_CASE("symmetry classification") {
  SECTION("isotropic takes precedence over the weaker classes") {
    PolarParams4 p;
    p.T0 = 1.0;
    p.T1 = 1.0;
    CHECK(classify_symmetry(p) == SymmetryClass4::Isotropic);
  }
  SECTION("square symmetric (R1 = 0)") {
    PolarParams4 p;
    p.T0 = 26880.0;
    p.T1 = 24740.0;
    p.R0 = 1.97e4;
    CHECK(classify_symmetry(p) == SymmetryClass4::SquareSymmetric);
  }
  SECTION("R0-orthotropic") {
    PolarParams4 p;
    p.T0 = 1.0;
    p.T1 = 1.0;
    p.R1 = 0.3;
    CHECK(classify_symmetry(p) == SymmetryClass4::R0Orthotropic);
  }
  SECTION("ordinary orthotropy, both branches") {
    PolarParams4 p;
    p.T0 = 1.0;
    p.T1 = 1.0;
    p.R0 = 0.3;
    p.R1 = 0.3;
    CHECK(classify_symmetry(p) == SymmetryClass4::OrdinaryOrthotropicK0);
    p.Phi0 = kPi / 4;
    CHECK(classify_symmetry(p) == SymmetryClass4::OrdinaryOrthotropicK1);
    p.Phi0 = 0.1;
    CHECK(classify_symmetry(p) == SymmetryClass4::GenericAnisotropic);
  }
  SECTION("rejects non-positive isotropic scale") {
    PolarParams4 p;
    p.T0 = -1.0;
    p.T1 = 0.0;
    CHECK_THROWS_AS(classify_symmetry(p), ValidationError);
  }
  SECTION("2nd-rank classes") {
    PolarParams2 p;
    p.T = 1.0;
    CHECK(classify_symmetry(p) == SymmetryClass2::Isotropic2);
    p.R = 0.5;
    CHECK(classify_symmetry(p) == SymmetryClass2::Anisotropic2);
  }
}

TEST_CASE("degenerate moduli flag undefined angles") {
  PolarParams4 p;
  p.T0 = 1.0;
  p.T1 = 1.0;
  p.R0 = 0.5;
  p.Phi0 = 0.2;
  const PolarParams4 q = polar_from_cartesian_4(cartesian_from_polar_4(p, 0.0));
  CHECK(q.phi0_defined);
  CHECK_FALSE(q.phi1_defined);
  CHECK(q.Phi1 == 0.0);
}

TEST_CASE("nine-parameter rotation: moduli invariant, evaluation shifts") {
  auto rng = make_rng(112);
  for (int i = 0; i < 100; ++i) {
    const PolarParamsB9 p = random_polarB9(rng);
    const double delta = uniform(rng, -2.0, 2.0);
    const PolarParamsB9 r = rotate(p, delta);
    REQUIRE(std::fabs(r.t0 - p.t0) <= 1e-12 * 10.0);
    REQUIRE(std::fabs(r.t1 - p.t1) <= 1e-12 * 10.0);
    REQUIRE(std::fabs(r.t3 - p.t3) <= 1e-12 * 10.0);
    REQUIRE(std::fabs(r.r0 - p.r0) <= 1e-12 * 10.0);
    REQUIRE(std::fabs(r.r1 - p.r1) <= 1e-12 * 10.0);
    REQUIRE(std::fabs(r.r2 - p.r2) <= 1e-12 * 10.0);
    const double theta = uniform(rng, -2.0, 2.0);
    const KelvinMatAsym m1 = cartesian_from_polar_B(r, theta);
    const KelvinMatAsym m2 = cartesian_from_polar_B(p, theta - delta);
    REQUIRE(max_abs(m1 - m2) <= 1e-12 * 20.0);
  }
}

TEST_CASE("2nd-rank rotation invariants") {
  auto rng = make_rng(113);
  for (int i = 0; i < 100; ++i) {
    PolarParams2 p;
    p.T = uniform(rng, -3.0, 3.0);
    p.R = uniform(rng, 0.1, 3.0);
    p.Phi = uniform(rng, -1.5, 1.5);
    const double delta = uniform(rng, -3.0, 3.0);
    const PolarParams2 r = rotate(p, delta);
    REQUIRE(r.T == p.T);
    REQUIRE(r.R == p.R);
    const KelvinVec v1 = cartesian_from_polar_2(r, 0.3);
    const KelvinVec v2 = cartesian_from_polar_2(p, 0.3 - delta);
    REQUIRE(max_abs(v1 - v2) <= 1e-12 * 6.0);
  }
}
