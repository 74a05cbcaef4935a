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

#include <boost/math/special_functions/laguerre.hpp>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "spinfc/errors.hpp"
#include "spinfc/franck_condon.hpp"
#include "spinfc/special_functions.hpp"

namespace spinfc {
namespace {

ModelParams make(int n, double a) {
  ModelParams p;
  p.n_spins = n;
  p.hyperfine = a;
  return p;
}

int argmax_abs(const RealVector& v) {
  Eigen::Index idx = 0;
  v.cwiseAbs().maxCoeff(&idx);
  return static_cast<int>(idx);
}

TEST(SpecialFunctions, LogFactorialAndBinomial) {
  EXPECT_DOUBLE_EQ(log_factorial(0), 0.0);
  EXPECT_NEAR(log_factorial(10), std::log(3628800.0), 1e-12);
  EXPECT_NEAR(std::exp(log_binomial(50, 25)), 126410606437752.0, 126410606437752.0 * 1e-13);
  EXPECT_THROW(log_factorial(-1), DomainError);
}

TEST(SpecialFunctions, LaguerreMatchesBoost) {
  for (int n = 0; n <= 30; n += 3) {
    for (int alpha = 0; alpha <= 12; alpha += 4) {
      for (const double x : {0.0, 0.25, 1.7, 12.5}) {
        const double ref = boost::math::laguerre(n, alpha, x);
        EXPECT_NEAR(laguerre(n, alpha, x), ref, 1e-10 * std::max(1.0, std::abs(ref)))
            << n << " " << alpha << " " << x;
      }
    }
  }
}

TEST(FcTable, IdentityWithoutCoupling) {
  const FcTable fc = fc_table(make(20, 0.0));
  EXPECT_DOUBLE_EQ(fc.theta, 0.0);
  EXPECT_LT((fc.factors - RealMatrix::Identity(21, 21)).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(FcTable, WeakCouplingGroundColumn) {
  const FcTable fc = fc_table(make(50, 0.2));
  EXPECT_NEAR(std::abs(fc(0, 0)), 0.78354, 1e-5);
  EXPECT_NEAR(std::abs(fc(1, 0) / fc(0, 0)), 0.7002, 1e-4);
  EXPECT_EQ(argmax_abs(fc.factors.col(0)), 0);
}

TEST(FcTable, OrthogonalForAnyCoupling) {
  for (const int n : {1, 7, 50, 200}) {
    for (const double a : {0.05, 0.2, 2.0, 10.0}) {
      const FcTable fc = fc_table(make(n, a));
      const RealMatrix gram = fc.factors.transpose() * fc.factors;
      EXPECT_LT((gram - RealMatrix::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff(), 1e-12)
          << "N=" << n << " A=" << a;
    }
  }
}

TEST(FcTable, MatchesMatrixExponential) {
  const int n = 12;
  const double theta = std::atan(1.3);
  const RealMatrix ref = testing::expm_rotation(n, theta);
  EXPECT_LT((fc_table(n, theta).factors - ref).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(FcGroundColumn, AgreesWithTableAndOracle) {
  for (const double a : {0.2, 2.0}) {
    const double theta = std::atan(a);
    const RealVector col = fc_ground_column(50, theta);
    const FcTable fc = fc_table(50, theta);
    for (int n = 0; n <= 50; ++n) {
      EXPECT_NEAR(col(n), fc(n, 0), 1e-12);
      EXPECT_NEAR(col(n), testing::ground_column_closed_form(50, n, theta), 1e-14);
    }
  }
}

TEST(FcGroundColumn, BinomialLawBeyondMatrixCap) {
  const int n = 2000;
  const double theta = std::atan(0.4);
  const double p = std::pow(std::sin(theta / 2), 2);
  const RealVector col = fc_ground_column(n, theta);
  EXPECT_NEAR(col.squaredNorm(), 1.0, 1e-12);
  for (int k = 0; k <= 40; k += 5) EXPECT_NEAR(col(k) * col(k), testing::binomial_pmf(n, k, p), 1e-14);
}

TEST(HpFactor, ZeroDisplacementIsIdentity) {
  const HpFcParams hp = hp_params_from_lambda(0.0);
  for (int m = 0; m < 5; ++m) {
    for (int n = 0; n < 5; ++n) EXPECT_DOUBLE_EQ(hp_fc_factor(hp, m, n), m == n ? 1.0 : 0.0);
  }
}

TEST(HpFactor, GroundProgressionIsPoisson) {
  const HpFcParams hp = hp_params_from_lambda(0.5);
  EXPECT_NEAR(hp_fc_factor(hp, 0, 0), std::exp(-0.25), 1e-15);
  EXPECT_NEAR(hp_fc_factor(hp, 0, 0), 0.7788, 1e-4);
  for (int n = 0; n < 12; ++n) {
    const double f = hp_fc_factor(hp, 0, n);
    EXPECT_NEAR(f * f, testing::poisson_pmf(0.5, n), 1e-15);
  }
}

TEST(HpFactor, ParamsFromModel) {
  const HpFcParams hp = hp_params(make(50, 0.2));
  EXPECT_NEAR(hp.lambda, 0.5, 1e-15);
  EXPECT_NEAR(hp.delta_x, 1.0, 1e-15);
}

TEST(HpFactor, DisplacementMatrixIsUnitary) {
  // Rows of <n|D(xi)|m> truncated well above the occupied band.
  const HpFcParams hp = hp_params_from_lambda(2.0);
  const int dim = 60;
  RealMatrix d(dim, dim);
  for (int n = 0; n < dim; ++n) {
    for (int m = 0; m < dim; ++m) d(n, m) = hp_fc_factor(hp, m, n);
  }
  const RealMatrix gram = d.topLeftCorner(dim, 10).transpose() * d.topLeftCorner(dim, 10);
  EXPECT_LT((gram - RealMatrix::Identity(10, 10)).cwiseAbs().maxCoeff(), 1e-12);
  // <n|D(xi)|m> = (-1)^{n-m} <m|D(xi)|n>
  EXPECT_NEAR(hp_fc_factor(hp, 2, 5), -hp_fc_factor(hp, 5, 2), 1e-15);
  EXPECT_NEAR(hp_fc_factor(hp, 1, 5), hp_fc_factor(hp, 5, 1), 1e-15);
}

TEST(HpFactor, LimitOfSpinFactors) {
  const double lambda = 0.5;
  const HpFcParams hp = hp_params_from_lambda(lambda);
  double previous = 1.0;
  for (const int n : {50, 200, 400}) {
    const double theta = std::atan(2.0 * std::sqrt(lambda / n));
    const FcTable fc = fc_table(n, theta);
    double worst = 0.0;
    for (int m = 0; m <= 2; ++m) {
      for (int k = 0; k <= 5; ++k) worst = std::max(worst, std::abs(std::abs(fc(k, m)) - std::abs(hp_fc_factor(hp, m, k))));
    }
    EXPECT_LT(worst, previous);
    previous = worst;
  }
  EXPECT_LT(previous, 5e-3);
}

TEST(FavoredLevel, Examples) {
  const FavoredLevel weak = favored_level_exact(make(50, 0.2));
  EXPECT_EQ(weak.level, 0);
  EXPECT_FALSE(weak.tie);
  const FavoredLevel strong = favored_level_exact(make(50, 2.0));
  EXPECT_EQ(strong.level, 14);
  EXPECT_NEAR(strong.predictor, 51.0 * (1.0 - 1.0 / std::sqrt(5.0)) / 2.0, 1e-12);
}

TEST(FavoredLevel, AgreesWithBruteForce) {
  for (const int n : {5, 20, 50, 150}) {
    for (double a = 0.05; a < 8.0; a *= 1.37) {
      const double theta = std::atan(a);
      const FavoredLevel fav = favored_level_exact(n, theta);
      const RealVector col = fc_ground_column(n, theta);
      const int brute = argmax_abs(col);
      if (fav.tie) {
        EXPECT_TRUE(brute == fav.level || brute == fav.level - 1);
      } else {
        EXPECT_EQ(brute, fav.level) << "N=" << n << " A=" << a;
      }
    }
  }
}

TEST(FavoredLevel, TieOnIntegerPredictor) {
  // (N+1) p = 3 with N = 5 gives p = 1/2, i.e. theta = pi/2.
  const FavoredLevel fav = favored_level_exact(5, std::numbers::pi / 2);
  EXPECT_TRUE(fav.tie);
  EXPECT_EQ(fav.level, 3);
  const RealVector col = fc_ground_column(5, std::numbers::pi / 2);
  EXPECT_NEAR(std::abs(col(2)), std::abs(col(3)), 1e-14);
}

TEST(FavoredLevel, BosonicRule) {
  EXPECT_EQ(favored_level_hp(hp_params_from_lambda(0.5)).level, 0);
  EXPECT_EQ(favored_level_hp(hp_params_from_lambda(12.5)).level, 12);
  const FavoredLevel tie = favored_level_hp(hp_params_from_lambda(3.0));
  EXPECT_EQ(tie.level, 3);
  EXPECT_TRUE(tie.tie);
}

}  // namespace
}  // namespace spinfc
