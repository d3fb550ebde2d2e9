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


#include "mumw/rotations.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mumw {

RotationSet make_rotation_set(int d, std::vector<RealMatrix> rotations, const ToleranceConfig& cfg) {
  if (d < 2) throw std::invalid_argument("rotation dimension must be >= 2");
  for (std::size_t a = 0; a < rotations.size(); ++a) {
    const auto report = verify_rotation(rotations[a], d, cfg);
    if (!report.passed()) {
      throw std::invalid_argument("rotation " + std::to_string(a + 1) +
                                  " is not an axis-fixing proper rotation:\n" + report.summary());
    }
  }
  return {d, std::move(rotations)};
}

RealMatrix rodrigues(const Eigen::Vector3d& axis, double theta) {
  if (std::abs(axis.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("rodrigues: axis must be a unit vector");
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::Matrix3d cross;
  cross << 0, -axis(2), axis(1),
           axis(2), 0, -axis(0),
           -axis(1), axis(0), 0;
  Eigen::Matrix3d r = c * Eigen::Matrix3d::Identity() + (1 - c) * axis * axis.transpose() + s * cross;
  return r;
}

RealMatrix axis_circulant_d3(double theta) {
  const double third = 2.0 * std::numbers::pi / 3.0;
  const double c1 = 2.0 / 3.0 * std::cos(theta) + 1.0 / 3.0;
  const double c2 = 2.0 / 3.0 * std::cos(theta - third) + 1.0 / 3.0;
  const double c3 = 2.0 / 3.0 * std::cos(theta + third) + 1.0 / 3.0;
  RealMatrix o(3, 3);
  o << c1, c2, c3,
       c3, c1, c2,
       c2, c3, c1;
  return o;
}

RotationSet circulant_rotations_d3(std::span<const double> angles) {
  const Eigen::Vector3d axis = Eigen::Vector3d::Ones() / std::sqrt(3.0);
  RotationSet set{3, {}};
  for (double theta : angles) set.rotations.push_back(rodrigues(axis, theta));
  return set;
}

RotationSet identity_rotations(int d, int L) {
  if (L < 1) throw std::invalid_argument("identity_rotations: L must be >= 1");
  if (d < 2) throw std::invalid_argument("identity_rotations: d must be >= 2");
  return {d, std::vector<RealMatrix>(static_cast<std::size_t>(L), RealMatrix::Identity(d, d))};
}

RealMatrix hyperplane_basis(int d) {
  if (d < 2) throw std::invalid_argument("hyperplane_basis: d must be >= 2");
  RealMatrix u(d, d - 1);
  for (int k = 0; k < d - 1; ++k) {
    RealVector v = RealVector::Zero(d);
    v(k) = 1.0;
    v(k + 1) = -1.0;
    for (int m = 0; m < k; ++m) v -= u.col(m).dot(v) * u.col(m);
    u.col(k) = v / v.norm();
  }
  return u;
}

RealMatrix planar_axis_rotation(int d, double theta, std::pair<int, int> plane) {
  if (d < 3) throw std::invalid_argument("planar_axis_rotation: d must be >= 3");
  const auto [i, j] = plane;
  if (i < 1 || j <= i || j > d - 1) {
    throw std::invalid_argument("planar_axis_rotation: plane indices must satisfy 1 <= i < j <= d-1");
  }
  const RealMatrix u = hyperplane_basis(d);
  const RealVector ui = u.col(i - 1);
  const RealVector uj = u.col(j - 1);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return RealMatrix::Identity(d, d) + (c - 1.0) * (ui * ui.transpose() + uj * uj.transpose()) +
         s * (uj * ui.transpose() - ui * uj.transpose());
}

RealMatrix random_axis_rotation(int d, Rng& rng) {
  if (d < 2) throw std::invalid_argument("random_axis_rotation: d must be >= 2");
  const int m = d - 1;
  RealMatrix g(m, m);
  for (int c = 0; c < m; ++c)
    for (int r = 0; r < m; ++r) g(r, c) = rng.normal();
  Eigen::HouseholderQR<RealMatrix> qr(g);
  RealMatrix q = qr.householderQ();
  // Sign fix makes Q Haar-distributed; then force det = +1.
  const RealMatrix rr = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < m; ++k) {
    if (rr(k, k) < 0) q.col(k) *= -1.0;
  }
  if (q.determinant() < 0) q.col(0) *= -1.0;

  const RealMatrix u = hyperplane_basis(d);
  const RealVector n = RealVector::Constant(d, 1.0 / std::sqrt(static_cast<double>(d)));
  return n * n.transpose() + u * q * u.transpose();
}

VerificationReport verify_rotation(const RealMatrix& o, int d, const ToleranceConfig& cfg) {
  if (o.rows() != o.cols()) throw std::invalid_argument("verify_rotation: matrix is not square");
  VerificationReport report;
  if (o.rows() != d) {
    report.add("dimension", 1.0, 0.0);
    return report;
  }
  const RealVector n = RealVector::Constant(d, 1.0 / std::sqrt(static_cast<double>(d)));
  report.add("orthogonality", (o.transpose() * o - RealMatrix::Identity(d, d)).cwiseAbs().maxCoeff(),
             cfg.ortho_tol);
  report.add("axis", (o * n - n).cwiseAbs().maxCoeff(), cfg.ortho_tol);
  report.add("determinant", std::abs(o.determinant() - 1.0), 1e-9);
  return report;
}

}  // namespace mumw
