// Copyright 2026 The mumw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Randomized property suites over constructed ensembles.

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_support.h"

namespace mumw {
namespace {

class PerDimension : public ::testing::TestWithParam<int> {};

TEST_P(PerDimension, MapTracePreservingAndPositive) {
  const int d = GetParam();
  const auto basis = make_generator_basis(d);
  Rng rng(100 + d);
  const auto ts = testing::feasible_ts(basis);
  for (int s = 0; s < 100; ++s) {
    const MUM mum = build_mums(basis, ts[s % 3]);
    const RotationSet rots = testing::random_rotation_set(d, d + 1, rng);
    const HermitianOperator x = testing::random_hermitian(d, rng);
    EXPECT_NEAR(apply_positive_map(mum, rots, x).trace(), x.trace(), 1e-10);
    const DensityMatrix rho = random_density(d, 5000 + s);
    EXPECT_GE(min_eigenvalue(apply_positive_map(mum, rots, rho.op())), -1e-9);
  }
}

TEST_P(PerDimension, PurityBoundOnRankOneInputs) {
  const int d = GetParam();
  const auto basis = make_generator_basis(d);
  Rng rng(200 + d);
  for (double t : testing::feasible_ts(basis)) {
    const MUM mum = build_mums(basis, t);
    const RotationSet rots = testing::random_rotation_set(d, d + 1, rng);
    const double bound = 1.0 / (d * mum.kappa - 1.0);
    for (int s = 0; s < 50; ++s) {
      const ComplexVector v = haar_vector(d, rng);
      const HermitianOperator out = apply_positive_map(mum, rots, HermitianOperator(v * v.adjoint()));
      EXPECT_LE(hs_inner(out, out), bound + 1e-9);
    }
  }
}

TEST_P(PerDimension, MaximallyEntangledClosedForm) {
  const int d = GetParam();
  const auto basis = make_generator_basis(d);
  for (double t : testing::feasible_ts(basis)) {
    const MUM mum = build_mums(basis, t);
    const Witness w = build_witness_direct(mum, identity_rotations(d, d + 1));
    const double expected = (mum.L() - 1.0) * (1.0 - d * mum.kappa) / d;
    EXPECT_NEAR(evaluate_witness(w, max_entangled(d)), expected, 1e-10);
    EXPECT_LT(expected, 0.0);
  }
}

TEST_P(PerDimension, ProductStatesAreNeverDetected) {
  const int d = GetParam();
  const auto basis = make_generator_basis(d);
  Rng rng(300 + d);
  const MUM mum = build_mums(basis, 0.8 * max_feasible_t(basis));
  for (auto convention : {FactorConvention::conjugated, FactorConvention::plain}) {
    const Witness w = build_witness_direct(mum, testing::random_rotation_set(d, d + 1, rng), convention);
    for (int s = 0; s < 1000; ++s) {
      const DensityMatrix rho = random_product_state(d, d, 40000 + s);
      EXPECT_GE(evaluate_witness(w, rho), -1e-9);
      EXPECT_FALSE(detect(rho, w).detected);
    }
  }
}

TEST_P(PerDimension, CoincidenceBound) {
  const int d = GetParam();
  const auto basis = make_generator_basis(d);
  Rng rng(400 + d);
  for (double t : testing::feasible_ts(basis)) {
    const MUM mum = build_mums(basis, t);
    for (int s = 0; s < 1000; ++s) {
      const auto c = coincidence_sum(haar_vector(d, rng), mum);
      EXPECT_LE(c.value, c.bound + 1e-9);
    }
  }
}

TEST_P(PerDimension, BlockPositiveButNotPositive) {
  const int d = GetParam();
  const auto basis = make_generator_basis(d);
  Rng rng(500 + d);
  for (double t : testing::feasible_ts(basis)) {
    const Witness w = build_witness_direct(build_mums(basis, t), testing::random_rotation_set(d, d + 1, rng));
    const auto scan = block_positivity_scan(w, 10000, 600 + d, 0);
    EXPECT_GE(scan.product_minimum, -1e-6);
    EXPECT_LT(scan.min_eigenvalue, 0.0);
  }
}

class SmallDimension : public ::testing::TestWithParam<int> {};

TEST_P(SmallDimension, IsotropicCrossingOnGrid) {
  const int d = GetParam();
  const auto basis = make_generator_basis(d);
  constexpr double step = 1e-3;
  for (double t : testing::feasible_ts(basis)) {
    const Witness w = build_witness_direct(build_mums(basis, t), identity_rotations(d, d + 1));
    int i = 0;
    while (evaluate_witness(w, isotropic_state(d, i * step)) > 0.0) ++i;
    EXPECT_LE(std::abs(i * step - 1.0 / (d + 1)), step * (1 + 1e-9));
  }
}

INSTANTIATE_TEST_SUITE_P(D2to6, PerDimension, ::testing::Values(2, 3, 4, 5, 6));
INSTANTIATE_TEST_SUITE_P(D2to4, SmallDimension, ::testing::Values(2, 3, 4));

TEST(MumAxioms, ConstructedD2to8) {
  for (int d = 2; d <= 8; ++d) {
    for (const char* scheme : {"default", "sequential"}) {
      const auto basis = make_generator_basis(d, scheme);
      for (double t : testing::feasible_ts(basis)) {
        const auto report = verify_mum_axioms(build_mums(basis, t));
        EXPECT_TRUE(report.passed()) << "d=" << d << " " << scheme << ": " << report.summary();
      }
    }
  }
}

TEST(RouteEquivalence, RandomConfigurations) {
  Rng rng(77);
  for (int s = 0; s < 20; ++s) {
    const int d = 2 + s % 5;
    const auto basis = make_generator_basis(d, s % 2 == 0 ? "default" : "sequential");
    const double t = (0.1 + 0.85 * rng.uniform()) * max_feasible_t(basis);
    const MUM mum = build_mums(basis, t);
    const RotationSet rots = testing::random_rotation_set(d, d + 1, rng);
    const Witness choi = build_witness_choi(mum, rots);
    const Witness direct = build_witness_direct(mum, rots);
    EXPECT_LT(testing::max_abs_diff(choi.matrix.matrix(), direct.matrix.matrix()), 1e-12) << "config " << s;
  }
}

TEST(RotationGroupLaw, CirculantAndPlanar) {
  const Eigen::Vector3d n = Eigen::Vector3d::Ones() / std::sqrt(3.0);
  for (int i = -12; i <= 12; ++i) {
    for (int j = -12; j <= 12; j += 3) {
      const double a = i * std::numbers::pi / 12;
      const double b = j * std::numbers::pi / 12;
      EXPECT_LT((axis_circulant_d3(a) * axis_circulant_d3(b) - axis_circulant_d3(a + b)).cwiseAbs().maxCoeff(), 1e-10);
      EXPECT_LT((rodrigues(n, a) * rodrigues(n, b) - rodrigues(n, a + b)).cwiseAbs().maxCoeff(), 1e-10);
      for (int d = 3; d <= 6; ++d) {
        const RealMatrix ab = planar_axis_rotation(d, a, {1, 2}) * planar_axis_rotation(d, b, {1, 2});
        EXPECT_LT((ab - planar_axis_rotation(d, a + b, {1, 2})).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_TRUE(verify_rotation(planar_axis_rotation(d, a, {1, d - 1}), d).passed());
      }
      EXPECT_TRUE(verify_rotation(axis_circulant_d3(a), 3).passed());
    }
  }
}

}  // namespace
}  // namespace mumw
