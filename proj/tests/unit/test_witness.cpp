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

#include "mumw/witness.h"
#include "test_support.h"

namespace mumw {
namespace {

using testing::frozen::kWitnessD3;
using testing::frozen::kWitnessMumD6;

// Eigenbases of X, Y, Z: three MUBs for a qubit.
MUBSet qubit_mubs() {
  const double r = 1.0 / std::sqrt(2.0);
  const Complex i(0, 1);
  MUBSet set{2, {}};
  set.bases.push_back({ComplexVector::Unit(2, 0), ComplexVector::Unit(2, 1)});
  ComplexVector xp(2), xm(2), yp(2), ym(2);
  xp << r, r;
  xm << r, -r;
  yp << r, i * r;
  ym << r, -i * r;
  set.bases.push_back({xp, xm});
  set.bases.push_back({yp, ym});
  return set;
}

ComplexMatrix swap_factors(const ComplexMatrix& m, Index d) {
  ComplexMatrix out(m.rows(), m.cols());
  for (Index a = 0; a < d; ++a)
    for (Index b = 0; b < d; ++b)
      for (Index c = 0; c < d; ++c)
        for (Index e = 0; e < d; ++e) out(b * d + a, e * d + c) = m(a * d + b, c * d + e);
  return out;
}

TEST(PositiveMap, IdentityIsFixedPoint) {
  const MUM mum = mum_fixture_d3();
  const RotationSet rots = circulant_rotations_d3(testing::reference_angles_d3());
  const auto out = apply_positive_map(mum, rots, HermitianOperator(identity(3)));
  EXPECT_LT(testing::max_abs_diff(out.matrix(), identity(3)), 1e-14);
}

TEST(PositiveMap, TracePreservingOnRandomStates) {
  Rng rng(3);
  for (int d = 2; d <= 5; ++d) {
    const auto basis = make_generator_basis(d);
    const MUM mum = build_mums(basis, 0.6 * max_feasible_t(basis));
    const RotationSet rots = testing::random_rotation_set(d, d + 1, rng);
    for (int s = 0; s < 10; ++s) {
      const DensityMatrix rho = random_density(d, 1000 + s);
      EXPECT_NEAR(apply_positive_map(mum, rots, rho.op()).trace(), 1.0, 1e-12);
    }
  }
}

TEST(PositiveMap, FixtureOutputIsPositiveUpToRounding) {
  // The fixture is a rounded transcription, so positivity holds only to the fixture tolerance.
  const MUM mum = mum_fixture_d3();
  ComplexMatrix e0 = ComplexMatrix::Zero(3, 3);
  e0(0, 0) = 1.0;
  const auto out = apply_positive_map(mum, identity_rotations(3, 4), HermitianOperator(e0));
  EXPECT_GE(min_eigenvalue(out), -ToleranceConfig{}.fixture_tol);
}

TEST(PositiveMap, PreconditionErrors) {
  const MUM mum = build_mums(make_generator_basis(3), 0.05);
  const HermitianOperator x(identity(3));
  EXPECT_THROW(apply_positive_map(mum, identity_rotations(3, 3), x), std::invalid_argument);
  EXPECT_THROW(apply_positive_map(mum, identity_rotations(4, 4), x), std::invalid_argument);
  EXPECT_THROW(apply_positive_map(mum, identity_rotations(3, 4), HermitianOperator(identity(2))),
               std::invalid_argument);

  std::vector<std::vector<HermitianOperator>> flat(4, std::vector<HermitianOperator>(3, HermitianOperator(identity(3) / 3.0)));
  const MUM trivial = make_mum(3, flat, std::nullopt, "trivial");
  EXPECT_THROW(apply_positive_map(trivial, identity_rotations(3, 4), x), std::invalid_argument);
  EXPECT_THROW(build_witness_choi(trivial, identity_rotations(3, 4)), std::invalid_argument);
  // The direct form stays defined at kappa = 1/d.
  const Witness w = build_witness_direct(trivial, identity_rotations(3, 4));
  EXPECT_NEAR(w.matrix.trace(), 0.0, 1e-12);
}

TEST(BuildWitness, RoutesAgreeForQubitMubs) {
  const MUM mum = mub_to_mum(qubit_mubs());
  ASSERT_EQ(mum.L(), 3);
  const Witness choi = build_witness_choi(mum, identity_rotations(2, 3));
  const Witness direct = build_witness_direct(mum, identity_rotations(2, 3));
  EXPECT_LT(testing::max_abs_diff(choi.matrix.matrix(), direct.matrix.matrix()), 1e-12);
  EXPECT_EQ(choi.provenance.route, WitnessRoute::choi);
  EXPECT_EQ(direct.provenance.rotations, "identity");
}

TEST(BuildWitness, QubitMubWitnessSwapSymmetry) {
  const MUM mum = mub_to_mum(qubit_mubs());
  const Witness w = build_witness_direct(mum, identity_rotations(2, 3));
  ComplexMatrix expected = 2.0 * identity(4);
  for (const auto& povm : mum.elements)
    for (const auto& p : povm) expected -= kron(ComplexMatrix(p.matrix().conjugate()), p.matrix());
  EXPECT_LT(testing::max_abs_diff(w.matrix.matrix(), expected), 1e-15);
  EXPECT_LT(testing::max_abs_diff(swap_factors(w.matrix.matrix(), 2), w.matrix.matrix().conjugate()), 1e-15);
}

TEST(BuildWitness, TraceIsDTimesDKappaMinusOne) {
  for (int d = 2; d <= 5; ++d) {
    const auto basis = make_generator_basis(d);
    const MUM mum = build_mums(basis, 0.5 * max_feasible_t(basis));
    const Witness w = build_witness_direct(mum, identity_rotations(d, d + 1));
    EXPECT_NEAR(w.matrix.trace(), d * (d * mum.kappa - 1.0), 1e-12);
  }
}

TEST(BuildWitness, CompletePrefactorIsOnePlusKappa) {
  const auto basis = make_generator_basis(3);
  const MUM mum = build_mums(basis, 0.07);
  const Witness w = build_witness_direct(mum, identity_rotations(3, 4));
  ComplexMatrix sum = ComplexMatrix::Zero(9, 9);
  for (const auto& povm : mum.elements)
    for (const auto& p : povm) sum += kron(ComplexMatrix(p.matrix().conjugate()), p.matrix());
  EXPECT_LT(testing::max_abs_diff(w.matrix.matrix() + sum, (1.0 + mum.kappa) * identity(9)), 1e-14);
}

TEST(BuildWitness, FixtureD3MatchesPrintedEntries) {
  const Witness w = build_witness_choi(mum_fixture_d3(), circulant_rotations_d3(testing::reference_angles_d3()));
  EXPECT_NEAR(w.matrix(0, 0).real(), 0.001, 2e-3);
  EXPECT_NEAR(w.matrix(0, 8).real(), -0.028, 2e-3);
}

TEST(EvaluateWitness, FixtureD3) {
  const Witness w = build_witness_direct(mum_fixture_d3(), circulant_rotations_d3(testing::reference_angles_d3()));
  const double v = evaluate_witness(w, rho_fixture_3x3());
  EXPECT_NEAR(v, kWitnessD3, 1e-12);
  EXPECT_NEAR(v, testing::reference::kWitnessD3, 5e-4);
}

TEST(EvaluateWitness, FixtureD6Mum) {
  const MUM mum = mum_fixture_d6();
  const double v = evaluate_witness(build_witness_direct(mum, identity_rotations(6, 7)), rho_fixture_6x6());
  EXPECT_NEAR(v, kWitnessMumD6, 1e-12);
  EXPECT_NEAR(v, testing::reference::kWitnessMumD6, 3e-3);
}

TEST(EvaluateWitness, WhiteNoiseNeverFlagged) {
  const Witness w = build_witness_direct(mum_fixture_d3(), circulant_rotations_d3(testing::reference_angles_d3()));
  const double v = evaluate_witness(w, maximally_mixed(9));
  EXPECT_NEAR(v, w.matrix.trace() / 9.0, 1e-15);
  EXPECT_GE(v, 0.0);
}

TEST(EvaluateWitness, DimensionMismatch) {
  const Witness w = build_witness_direct(mum_fixture_d3(), identity_rotations(3, 4));
  EXPECT_THROW(evaluate_witness(w, maximally_mixed(4)), std::invalid_argument);
}

TEST(BlockPositivity, FixtureWitness) {
  const Witness w = build_witness_direct(mum_fixture_d3(), circulant_rotations_d3(testing::reference_angles_d3()));
  const auto r = block_positivity_scan(w, 10000, 1);
  EXPECT_EQ(r.samples, 10000u);
  EXPECT_GE(r.product_minimum, -1e-6);
  EXPECT_LT(r.min_eigenvalue, 0.0);
}

TEST(BlockPositivity, TrivialOperators) {
  const HermitianOperator id(identity(9));
  const HermitianOperator neg(-identity(9));
  EXPECT_NEAR(block_positivity_scan(id, 3, 3, 50, 0).product_minimum, 1.0, 1e-14);
  EXPECT_NEAR(block_positivity_scan(neg, 3, 3, 50, 0).product_minimum, -1.0, 1e-14);
  EXPECT_THROW(block_positivity_scan(id, 3, 3, 0, 0), std::invalid_argument);
  EXPECT_THROW(block_positivity_scan(id, 2, 3, 10, 0), std::invalid_argument);
}

TEST(BlockPositivity, IndependentOfWorkerCount) {
  const Witness w = build_witness_direct(mum_fixture_d3(), circulant_rotations_d3(testing::reference_angles_d3()));
  const auto one = block_positivity_scan(w, 2001, 17, 1);
  const auto four = block_positivity_scan(w, 2001, 17, 4);
  const auto all = block_positivity_scan(w, 2001, 17, 0);
  EXPECT_EQ(one.product_minimum, four.product_minimum);
  EXPECT_EQ(one.product_minimum, all.product_minimum);
}

TEST(FactorConvention, Names) {
  EXPECT_EQ(factor_convention_from_string("plain"), FactorConvention::plain);
  EXPECT_EQ(to_string(FactorConvention::conjugated), "conjugated");
  EXPECT_THROW(factor_convention_from_string("transpose"), std::invalid_argument);
  EXPECT_EQ(to_string(WitnessRoute::choi), "choi");
}

}  // namespace
}  // namespace mumw
