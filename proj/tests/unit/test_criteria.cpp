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


#include <gtest/gtest.h>

#include <cmath>

#include "mumw/criteria.h"
#include "test_support.h"

namespace mumw {
namespace {

using testing::frozen::kJMinusOneMinusKappaD3;

TEST(JIndex, FixtureD3) {
  const MUM mum = mum_fixture_d3();
  const double j = j_index(rho_fixture_3x3(), mum);
  EXPECT_NEAR(j - 1.0 - mum.kappa, kJMinusOneMinusKappaD3, 1e-12);
  EXPECT_NEAR(j - 1.0 - mum.kappa, testing::reference::kJMinusOneMinusKappaD3, 1e-3);
  const auto report = j_criterion(rho_fixture_3x3(), mum);
  EXPECT_FALSE(report.detected);
  EXPECT_EQ(report.convention, "conjugated");
  EXPECT_DOUBLE_EQ(report.threshold, 1.0 + mum.kappa);
}

TEST(JIndex, WhiteNoise) {
  for (int d = 2; d <= 5; ++d) {
    const auto basis = make_generator_basis(d);
    const MUM mum = build_mums(basis, 0.5 * max_feasible_t(basis));
    for (auto c : {FactorConvention::conjugated, FactorConvention::plain}) {
      const double j = j_index(maximally_mixed(d * d), mum, c);
      EXPECT_NEAR(j, (d + 1.0) / d, 1e-12);
      EXPECT_FALSE(j_criterion(maximally_mixed(d * d), mum, c).detected);
    }
  }
}

TEST(JIndex, MaximallyEntangledIsDetected) {
  for (int d = 2; d <= 5; ++d) {
    const auto basis = make_generator_basis(d);
    const MUM mum = build_mums(basis, 0.5 * max_feasible_t(basis));
    EXPECT_NEAR(j_index(max_entangled(d), mum), (d + 1.0) * mum.kappa, 1e-12);
    EXPECT_TRUE(j_criterion(max_entangled(d), mum).detected);
  }
}

TEST(JIndex, Preconditions) {
  const MUM pair = mub_to_mum(fourier_mub_pair(3));
  EXPECT_THROW(j_index(maximally_mixed(9), pair), std::invalid_argument);
  EXPECT_THROW(j_index(maximally_mixed(4), mum_fixture_d3()), std::invalid_argument);
}

TEST(IsotropicWitnessValue, ThresholdAndEndpoints) {
  for (int d = 2; d <= 8; ++d) {
    for (double kappa : {1.0 / d + 0.01, 0.5 + 0.5 / d, 1.0}) {
      EXPECT_NEAR(isotropic_witness_value(d, 1.0 / (d + 1), kappa), 0.0, 1e-14);
      EXPECT_GT(isotropic_witness_value(d, 0.0, kappa), 0.0);
    }
  }
  EXPECT_NEAR(isotropic_witness_value(3, 0.5, 0.358), 1.358 - 4.0 * (0.179 + 0.5 / 3.0), 1e-15);
  EXPECT_NEAR(isotropic_witness_value(3, 0.5, 0.358), -0.0246667, 1e-6);
}

TEST(IsotropicWitnessValue, MatchesFullEvaluation) {
  for (int d = 2; d <= 4; ++d) {
    const auto basis = make_generator_basis(d);
    const MUM mum = build_mums(basis, 0.7 * max_feasible_t(basis));
    const Witness w = build_witness_direct(mum, identity_rotations(d, d + 1));
    for (double alpha : {0.0, 0.1, 1.0 / (d + 1), 0.5, 0.95}) {
      EXPECT_NEAR(evaluate_witness(w, isotropic_state(d, alpha)), isotropic_witness_value(d, alpha, mum.kappa), 1e-10);
    }
  }
}

TEST(IsotropicWitnessValue, RangeErrors) {
  EXPECT_THROW(isotropic_witness_value(3, 1.0, 0.5), std::invalid_argument);
  EXPECT_THROW(isotropic_witness_value(3, 0.5, 1.0 / 3), std::invalid_argument);
  EXPECT_THROW(isotropic_witness_value(3, 0.5, 1.01), std::invalid_argument);
  EXPECT_THROW(isotropic_witness_value(1, 0.5, 1.0), std::invalid_argument);
}

TEST(CoincidenceSum, QubitMubsEquality) {
  const double r = 1.0 / std::sqrt(2.0);
  MUBSet set = fourier_mub_pair(2);
  ComplexVector yp(2), ym(2);
  yp << r, Complex(0, r);
  ym << r, Complex(0, -r);
  set.bases.push_back({yp, ym});
  const MUM mum = mub_to_mum(set);
  const auto c = coincidence_sum(ComplexVector::Unit(2, 0), mum);
  EXPECT_NEAR(c.value, 2.0, 1e-14);
  EXPECT_NEAR(c.bound, 2.0, 1e-14);
}

TEST(CoincidenceSum, SinglePovmBound) {
  const auto basis = make_generator_basis(3);
  MUM mum = build_mums(basis, 0.08);
  mum.elements.resize(1);
  Rng rng(8);
  const auto c = coincidence_sum(haar_vector(3, rng), mum);
  EXPECT_NEAR(c.bound, (1.0 - mum.kappa + 2.0 * mum.kappa) / 2.0, 1e-15);
  EXPECT_LE(c.value, c.bound + 1e-9);
}

TEST(CoincidenceSum, Preconditions) {
  const MUM mum = mum_fixture_d3();
  EXPECT_THROW(coincidence_sum(ComplexVector::Ones(3), mum), std::invalid_argument);
  EXPECT_THROW(coincidence_sum(ComplexVector::Unit(2, 0), mum), std::invalid_argument);
}

TEST(Detect, FixtureAndNoise) {
  const Witness w = build_witness_direct(mum_fixture_d3(), circulant_rotations_d3(testing::reference_angles_d3()));
  const auto hit = detect(rho_fixture_3x3(), w);
  EXPECT_TRUE(hit.detected);
  EXPECT_EQ(hit.criterion, "witness");
  EXPECT_EQ(hit.mum_id, "fixture:mum-d3");
  EXPECT_FALSE(detect(maximally_mixed(9), w).detected);
  EXPECT_FALSE(detect(rho_fixture_3x3(), w, 0.01).detected);
  EXPECT_THROW(detect(maximally_mixed(9), w, -1.0), std::invalid_argument);
}

TEST(Detect, MubD6NotDetected) {
  const MUM mum = mub_to_mum(mub_fixture_d6(), {}, ValidationPolicy::fixture, "fixture:mub-d6");
  const Witness w = build_witness_direct(mum, identity_rotations(6, 3), FactorConvention::plain);
  const auto r = detect(rho_fixture_6x6(), w);
  EXPECT_FALSE(r.detected);
  EXPECT_NEAR(r.value, testing::frozen::kWitnessMubD6, 1e-12);
  EXPECT_NEAR(r.value, testing::reference::kWitnessMubD6, 0.02);
  EXPECT_EQ(r.convention, "plain");
}

TEST(Detect, IsotropicBoundaryAndAbove) {
  const auto basis = make_generator_basis(3);
  const MUM mum = build_mums(basis, 0.1);
  const Witness w = build_witness_direct(mum, identity_rotations(3, 4));
  EXPECT_FALSE(detect(isotropic_state(3, 0.25), w).detected);
  EXPECT_TRUE(detect(isotropic_state(3, 0.3), w).detected);
}

}  // namespace
}  // namespace mumw
