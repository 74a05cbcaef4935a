// Copyright 2026 The spinfc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "spinfc/collective_spin.hpp"
#include "spinfc/errors.hpp"

namespace spinfc {
namespace {

using std::numbers::pi;

TEST(BuildBasis, SingleSpin) {
  const CollectiveSpin spin = build_basis(1);
  EXPECT_EQ(spin.basis.dim(), 2);
  EXPECT_DOUBLE_EQ(spin.ops.j_z(0, 0).real(), -0.5);
  EXPECT_DOUBLE_EQ(spin.ops.j_z(1, 1).real(), 0.5);
  EXPECT_DOUBLE_EQ(spin.ops.j_plus(1, 0).real(), 1.0);
}

TEST(BuildBasis, LadderElementsTwoSpins) {
  const CollectiveSpin spin = build_basis(2);
  EXPECT_DOUBLE_EQ(spin.ops.j_plus(1, 0).real(), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(spin.ops.j_plus(2, 1).real(), std::sqrt(2.0));
}

TEST(BuildBasis, TotalSpinEigenvalue) {
  const CollectiveSpin spin = build_basis(50);
  EXPECT_DOUBLE_EQ(spin.ops.j_squared_eigenvalue, 650.0);
  EXPECT_EQ(spin.basis.dim(), 51);
  for (int m = 0; m <= 50; ++m) EXPECT_EQ(spin.ops.j_z(m, m).real(), m - 25.0);
}

TEST(BuildBasis, LadderFormulas) {
  const int n = 13;
  const CollectiveSpin spin = build_basis(n);
  for (int m = 0; m < n; ++m) {
    EXPECT_NEAR(spin.ops.j_plus(m + 1, m).real(), std::sqrt(double(n - m) * (m + 1)), 1e-15);
  }
  for (int m = 1; m <= n; ++m) {
    EXPECT_NEAR(spin.ops.j_minus(m - 1, m).real(), std::sqrt(double(m) * (n - m + 1)), 1e-15);
  }
}

TEST(BuildBasis, CommutatorsAndCasimir) {
  const std::complex<double> i(0.0, 1.0);
  for (const int n : {1, 4, 9, 30}) {
    const CollectiveOperators o = build_basis(n).ops;
    EXPECT_LT((o.j_x * o.j_y - o.j_y * o.j_x - i * o.j_z).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((o.j_y * o.j_z - o.j_z * o.j_y - i * o.j_x).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((o.j_z * o.j_x - o.j_x * o.j_z - i * o.j_y).cwiseAbs().maxCoeff(), 1e-12);
    const ComplexMatrix casimir = o.j_x * o.j_x + o.j_y * o.j_y + o.j_z * o.j_z;
    const ComplexMatrix expected = o.j_squared_eigenvalue * ComplexMatrix::Identity(n + 1, n + 1);
    EXPECT_LT((casimir - expected).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(BuildBasis, RejectsOutOfRange) {
  EXPECT_THROW(build_basis(0), DomainError);
  EXPECT_THROW(build_basis(kMaxSpins + 1), DomainError);
  EXPECT_NO_THROW(build_basis(200));
}

TEST(WignerD, IdentityAtZero) {
  const WignerDMatrix d = wigner_d(50, 0.0);
  EXPECT_LT((d.elements() - RealMatrix::Identity(51, 51)).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(WignerD, TwoSpinsQuarterTurn) {
  // oracle: Pade exponential of -i (pi/2) J_y
  const RealMatrix oracle = testing::expm_rotation(2, pi / 2);
  EXPECT_NEAR(oracle(0, 0), 0.5, 1e-14);
  EXPECT_NEAR(wigner_d(2, pi / 2)(0, 0), 0.5, 1e-14);
}

TEST(WignerD, FiftySpinsCorner) {
  const double theta = std::atan(0.2);
  const double expected = std::pow(std::cos(theta / 2), 50);
  EXPECT_NEAR(expected, 0.78354, 5e-6);
  EXPECT_NEAR(wigner_d(50, theta)(0, 0), expected, 1e-13);
}

TEST(WignerD, MatchesPadeExponential) {
  for (const int n : {1, 2, 3, 6, 11, 20, 30}) {
    for (const double theta : {0.1, 0.5, 1.0, pi / 2, 2.0, -0.7, 4.0}) {
      const RealMatrix diff = wigner_d(n, theta).elements() - testing::expm_rotation(n, theta);
      EXPECT_LT(diff.cwiseAbs().maxCoeff(), 1e-10) << "N=" << n << " theta=" << theta;
    }
  }
}

TEST(WignerD, OrthogonalityProperty) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> angle(0.0, pi);
  std::uniform_int_distribution<int> size(1, 200);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = size(rng);
    const double theta = angle(rng);
    const RealMatrix d = wigner_d(n, theta).elements();
    const double err = (d.transpose() * d - RealMatrix::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff();
    EXPECT_LT(err, 1e-10) << "N=" << n << " theta=" << theta;
  }
}

TEST(WignerD, CompositionAndInverse) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (const int n : {5, 37, 120}) {
    const double a = angle(rng);
    const double b = angle(rng);
    const RealMatrix product = wigner_d(n, a).elements() * wigner_d(n, b).elements();
    EXPECT_LT((product - wigner_d(n, a + b).elements()).cwiseAbs().maxCoeff(), 1e-9);
    const RealMatrix forward = wigner_d(n, a).elements();
    const RealMatrix backward = wigner_d(n, -a).elements();
    EXPECT_LT((forward - backward.transpose()).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(WignerD, RejectsNonFiniteAngle) {
  EXPECT_THROW(wigner_d(4, std::nan("")), DomainError);
  EXPECT_THROW(wigner_d(4, INFINITY), DomainError);
}

TEST(WignerDExplicit, AgreesWithRecursionWhenWellConditioned) {
  for (const int n : {1, 4, 10, 25}) {
    for (const double theta : {0.0, 0.3, 1.2, pi / 2, pi, 2.5, -1.1}) {
      const RealMatrix d = wigner_d_recursive(n, theta);
      for (int m = 0; m <= n; ++m) {
        for (int l = 0; l <= n; ++l) {
          const ExplicitSum sum = wigner_d_explicit(n, l, m, theta);
          EXPECT_NEAR(sum.value, d(l, m), 1e-12 * std::max(1.0, sum.abs_sum));
        }
      }
    }
  }
}

TEST(WignerDExplicit, EdgeAngles) {
  // 0^0 = 1: theta = 0 gives the identity and theta = pi the anti-diagonal.
  const int n = 6;
  for (int m = 0; m <= n; ++m) {
    for (int l = 0; l <= n; ++l) {
      EXPECT_NEAR(wigner_d_explicit(n, l, m, 0.0).value, l == m ? 1.0 : 0.0, 1e-15);
      const double at_pi = wigner_d_explicit(n, l, m, pi).value;
      if (l + m == n) {
        EXPECT_NEAR(std::abs(at_pi), 1.0, 1e-12);
      } else {
        EXPECT_NEAR(at_pi, 0.0, 1e-12);
      }
    }
  }
}

TEST(WignerDExplicit, ReportsCancellation) {
  const ExplicitSum corner = wigner_d_explicit(200, 0, 0, 1.1);
  EXPECT_DOUBLE_EQ(corner.abs_sum, std::abs(corner.value));
  EXPECT_GT(wigner_d_explicit(200, 100, 100, 1.1).abs_sum, 1e20);
  EXPECT_THROW(wigner_d_explicit(4, 5, 0, 0.1), DomainError);
}

TEST(RotateDicke, ZeroAngleIsUnitVector) {
  const RotatedDickeState state = rotate_dicke(DickeBasis(8), 0.0, 3);
  RealVector expected = RealVector::Zero(9);
  expected(3) = 1.0;
  EXPECT_EQ(state.coefficients, expected);
}

TEST(RotateDicke, SingleSpinQuarterTurn) {
  const RotatedDickeState state = rotate_dicke(DickeBasis(1), pi / 2, 0);
  const RealMatrix oracle = testing::expm_rotation(1, pi / 2);
  EXPECT_NEAR(state.coefficients(0), oracle(0, 0), 1e-14);
  EXPECT_NEAR(state.coefficients(1), oracle(1, 0), 1e-14);
  EXPECT_NEAR(std::abs(state.coefficients(0)), 1 / std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(std::abs(state.coefficients(1)), 1 / std::sqrt(2.0), 1e-14);
}

TEST(RotateDicke, GroundColumnIsBinomial) {
  const double theta = std::atan(0.2);
  const double p = std::pow(std::sin(theta / 2), 2);
  const RotatedDickeState state = rotate_dicke(DickeBasis(50), theta, 0);
  EXPECT_NEAR(state.coefficients.norm(), 1.0, 1e-12);
  for (int l = 0; l <= 50; ++l) {
    EXPECT_NEAR(state.coefficients(l) * state.coefficients(l), testing::binomial_pmf(50, l, p), 1e-13);
  }
}

TEST(RotateDicke, RejectsBadIndex) {
  EXPECT_THROW(rotate_dicke(DickeBasis(4), 0.1, 5), DomainError);
  EXPECT_THROW(rotate_dicke(DickeBasis(4), 0.1, -1), DomainError);
}

TEST(RotationOracle, SpinFlip) {
  const RealMatrix u = rotation_oracle(build_basis(1), pi);
  EXPECT_NEAR(u(0, 0), 0.0, 1e-12);
  EXPECT_NEAR(u(1, 1), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(u(0, 1)), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(u(1, 0)), 1.0, 1e-12);
}

TEST(RotationOracle, IsProperRotation) {
  const RealMatrix u = rotation_oracle(build_basis(4), 0.3);
  EXPECT_LT((u.transpose() * u - RealMatrix::Identity(5, 5)).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_NEAR(u.determinant(), 1.0, 1e-10);
}

TEST(RotationOracle, AgreesWithWignerD) {
  for (int n = 1; n <= 30; ++n) {
    const CollectiveSpin spin = build_basis(n);
    for (const double theta : {0.1, 0.5, 1.0, pi / 2, 2.0}) {
      EXPECT_LT((rotation_oracle(spin, theta) - wigner_d(n, theta).elements()).cwiseAbs().maxCoeff(), 1e-8);
    }
  }
}

TEST(RotationOracle, RejectsLargeN) { EXPECT_THROW(rotation_oracle(build_basis(kMaxOracleSpins + 1), 0.1), DomainError); }

}  // namespace
}  // namespace spinfc
