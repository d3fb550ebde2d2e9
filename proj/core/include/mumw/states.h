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


#ifndef MUMW_STATES_H
#define MUMW_STATES_H

#include <cstdint>

#include "mumw/numerics.h"

namespace mumw {

/// A density matrix validated under a policy.
///
/// strict:  trace 1 within 1e-10, min eigenvalue >= -psd_tol.
/// fixture: trace 1 within 1e-2, min eigenvalue >= -5e-3. Raw entries are
///          kept; nothing is renormalized unless normalized() is called.
class DensityMatrix {
 public:
  static constexpr double kFixtureTraceTol = 1e-2;
  static constexpr double kFixturePsdTol = 5e-3;

  DensityMatrix(HermitianOperator op, ValidationPolicy policy = ValidationPolicy::strict,
                const ToleranceConfig& cfg = {});

  /// Checks Hermiticity of `m` under `policy` (see validate_hermitian) first.
  static DensityMatrix from_matrix(const ComplexMatrix& m, ValidationPolicy policy = ValidationPolicy::strict,
                                   const ToleranceConfig& cfg = {});

  Index dim() const { return op_.dim(); }
  const HermitianOperator& op() const { return op_; }
  const ComplexMatrix& matrix() const { return op_.matrix(); }
  ValidationPolicy policy() const { return policy_; }
  double trace() const { return op_.trace(); }

  /// A copy divided by its trace. Keeps the validation tag.
  DensityMatrix normalized() const;

 private:
  HermitianOperator op_;
  ValidationPolicy policy_ = ValidationPolicy::strict;
};

/// |phi+><phi+| with |phi+> = (1/sqrt d) sum_i |ii>.
DensityMatrix max_entangled(int d);

/// alpha |phi+><phi+| + (1 - alpha) I / d^2, 0 <= alpha < 1.
DensityMatrix isotropic_state(int d, double alpha);

DensityMatrix maximally_mixed(Index dim);

/// |psi><psi| / <psi|psi>. Throws on a zero vector.
DensityMatrix pure_state(const ComplexVector& psi);

/// G G^dagger / Tr(G G^dagger) for a seeded d x d complex Gaussian G.
DensityMatrix random_density(int d, std::uint64_t seed);

/// |a><a| (x) |b><b| from seeded Haar vectors.
DensityMatrix random_product_state(int dim_a, int dim_b, std::uint64_t seed);

}  // namespace mumw

#endif  // MUMW_STATES_H
