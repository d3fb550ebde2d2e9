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


#ifndef MUMW_ROTATIONS_H
#define MUMW_ROTATIONS_H

#include <span>
#include <utility>
#include <vector>

#include "mumw/numerics.h"
#include "mumw/random.h"
#include "mumw/report.h"

namespace mumw {

/// One proper rotation of R^d per POVM, each fixing (1,...,1)/sqrt(d).
struct RotationSet {
  int d = 0;
  std::vector<RealMatrix> rotations;

  int L() const { return static_cast<int>(rotations.size()); }
};

/// Validates every matrix with verify_rotation(); throws on failure.
RotationSet make_rotation_set(int d, std::vector<RealMatrix> rotations, const ToleranceConfig& cfg = {});

/// Rotation by `theta` about the unit `axis` (right-handed).
/// Throws if |axis| differs from 1 by more than 1e-12.
RealMatrix rodrigues(const Eigen::Vector3d& axis, double theta);

/// The circulant
///
///   [c1 c2 c3]
///   [c3 c1 c2]     c1 = 2/3 cos(t) + 1/3
///   [c2 c3 c1]     c2 = 2/3 cos(t - 2pi/3) + 1/3,  c3 = 2/3 cos(t + 2pi/3) + 1/3
///
/// which equals rodrigues((1,1,1)/sqrt 3, -theta).
RealMatrix axis_circulant_d3(double theta);

/// One rotation per angle, O(theta) = rodrigues((1,1,1)/sqrt 3, theta)
/// (= axis_circulant_d3(-theta)). This is the convention under which the
/// reference d = 3 witness value is reproduced.
RotationSet circulant_rotations_d3(std::span<const double> angles);

RotationSet identity_rotations(int d, int L);

/// Orthonormal basis (columns) of the hyperplane orthogonal to (1,...,1),
/// from Gram-Schmidt on e_k - e_{k+1}, k = 1..d-1. Deterministic.
RealMatrix hyperplane_basis(int d);

/// Rotation by `theta` in span(u_i, u_j) of the hyperplane basis, identity on
/// the axis and on the remaining hyperplane directions. `plane` is 1-based,
/// i < j <= d-1, d >= 3.
RealMatrix planar_axis_rotation(int d, double theta, std::pair<int, int> plane);

/// Haar-random element of SO(d-1) acting on the hyperplane; fixes the axis.
RealMatrix random_axis_rotation(int d, Rng& rng);

/// "orthogonality" max|O^T O - I|, "axis" max|O n - n| (both ortho_tol),
/// "determinant" |det O - 1| (1e-9).
VerificationReport verify_rotation(const RealMatrix& o, int d, const ToleranceConfig& cfg = {});

}  // namespace mumw

#endif  // MUMW_ROTATIONS_H
