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


#include "mumw/states.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "mumw/random.h"

namespace mumw {

DensityMatrix::DensityMatrix(HermitianOperator op, ValidationPolicy policy, const ToleranceConfig& cfg)
    : op_(std::move(op)), policy_(policy) {
  if (op_.dim() < 1) throw std::invalid_argument("density matrix must be non-empty");
  const bool strict = policy == ValidationPolicy::strict;
  const double trace_tol = strict ? 1e-10 : kFixtureTraceTol;
  const double psd_tol = strict ? cfg.psd_tol : kFixturePsdTol;
  const double tr = op_.trace();
  if (std::abs(tr - 1.0) > trace_tol) {
    std::ostringstream msg;
    msg << "density matrix trace " << tr << " differs from 1 by more than " << trace_tol;
    throw std::invalid_argument(msg.str());
  }
  const double lmin = min_eigenvalue(op_);
  if (lmin < -psd_tol) {
    std::ostringstream msg;
    msg << "density matrix has eigenvalue " << lmin << " below -" << psd_tol;
    throw std::invalid_argument(msg.str());
  }
}

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m, ValidationPolicy policy,
                                         const ToleranceConfig& cfg) {
  return DensityMatrix(validate_hermitian(m, cfg, policy).op, policy, cfg);
}

DensityMatrix DensityMatrix::normalized() const {
  return DensityMatrix(HermitianOperator(op_.matrix() / trace()), policy_);
}

namespace {

void require_dim(int d) {
  if (d < 2) throw std::invalid_argument("state dimension must be >= 2, got " + std::to_string(d));
}

ComplexVector phi_plus(int d) {
  ComplexVector v = ComplexVector::Zero(static_cast<Index>(d) * d);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (int i = 0; i < d; ++i) v(static_cast<Index>(i) * d + i) = amp;
  return v;
}

}  // namespace

DensityMatrix max_entangled(int d) {
  require_dim(d);
  const ComplexVector v = phi_plus(d);
  return DensityMatrix(HermitianOperator(v * v.adjoint()));
}

DensityMatrix isotropic_state(int d, double alpha) {
  require_dim(d);
  if (!(alpha >= 0.0 && alpha < 1.0)) throw std::invalid_argument("isotropic_state: alpha must be in [0, 1)");
  const ComplexVector v = phi_plus(d);
  const Index n = static_cast<Index>(d) * d;
  return DensityMatrix(HermitianOperator(alpha * v * v.adjoint() + (1.0 - alpha) / n * identity(n)));
}

DensityMatrix maximally_mixed(Index dim) {
  if (dim < 1) throw std::invalid_argument("maximally_mixed: dim must be >= 1");
  return DensityMatrix(HermitianOperator(identity(dim) / static_cast<double>(dim)));
}

DensityMatrix pure_state(const ComplexVector& psi) {
  const double n2 = psi.squaredNorm();
  if (!(n2 > 0.0)) throw std::invalid_argument("pure_state: zero vector");
  return DensityMatrix(HermitianOperator(psi * psi.adjoint() / n2));
}

DensityMatrix random_density(int d, std::uint64_t seed) {
  require_dim(d);
  Rng rng(seed);
  const ComplexMatrix g = complex_gaussian(d, d, rng);
  const ComplexMatrix m = g * g.adjoint();
  return DensityMatrix(HermitianOperator(m / m.trace().real()));
}

DensityMatrix random_product_state(int dim_a, int dim_b, std::uint64_t seed) {
  require_dim(dim_a);
  require_dim(dim_b);
  Rng rng(seed);
  const ComplexVector a = haar_vector(dim_a, rng);
  const ComplexVector b = haar_vector(dim_b, rng);
  return DensityMatrix(HermitianOperator(kron(ComplexMatrix(a * a.adjoint()), ComplexMatrix(b * b.adjoint()))));
}

}  // namespace mumw
