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


#ifndef MUMW_TESTS_TEST_SUPPORT_H
#define MUMW_TESTS_TEST_SUPPORT_H

#include <cstdint>
#include <vector>

#include "mumw/criteria.h"
#include "mumw/fixtures.h"
#include "mumw/generators.h"
#include "mumw/measurements.h"
#include "mumw/rotations.h"
#include "mumw/states.h"
#include "mumw/witness.h"

namespace mumw::testing {

// Values frozen from the independent numpy oracle (tests/oracles).
namespace frozen {
inline constexpr double kKappaMumD3 = 0.35785402969633334;
inline constexpr double kWitnessD3 = -0.0017042511370390253;
inline constexpr double kJMinusOneMinusKappaD3 = -0.0085930108847301345;
inline constexpr double kKappaMumD6 = 0.18893609523809513;
inline constexpr double kWitnessMumD6 = -0.0110481;
inline constexpr double kWitnessMubD6 = 0.66;
inline constexpr double kKappaConstructedD3 = 0.35801317035765973;  // paper-d3 scheme, t = 0.04066
}  // namespace frozen

// Reference values and their acceptance tolerances.
namespace reference {
inline constexpr double kKappaD3 = 0.358;
inline constexpr double kWitnessD3 = -0.0017;
inline constexpr double kJMinusOneMinusKappaD3 = -0.0085;
inline constexpr double kWitnessMubD6 = 0.68;
inline constexpr double kWitnessMumD6 = -0.0114;
inline constexpr double kTD3 = 0.04066;
}  // namespace reference

/// theta = (pi/3, pi/3, 0, 0).
std::vector<double> reference_angles_d3();

/// Three distinct feasible construction parameters: 0.2, 0.55 and 0.9 of t*.
std::vector<double> feasible_ts(const GeneratorBasis& basis);

/// L random axis-fixing rotations of R^d.
RotationSet random_rotation_set(int d, int L, Rng& rng);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Random Hermitian matrix (not normalized).
HermitianOperator random_hermitian(int d, Rng& rng);

}  // namespace mumw::testing

#endif  // MUMW_TESTS_TEST_SUPPORT_H
