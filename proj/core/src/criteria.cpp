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


#include "mumw/criteria.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mumw {

double j_index(const DensityMatrix& rho, const MUM& mum, FactorConvention convention) {
  const int d = mum.d;
  if (mum.L() != d + 1) {
    throw std::invalid_argument("j_index: needs a complete MUM (L = d+1), got L=" + std::to_string(mum.L()));
  }
  if (rho.dim() != static_cast<Index>(d) * d) throw std::invalid_argument("j_index: state dimension mismatch");
  ComplexMatrix sum = ComplexMatrix::Zero(rho.dim(), rho.dim());
  for (const auto& povm : mum.elements) {
    for (const auto& p : povm) {
      const ComplexMatrix first =
          convention == FactorConvention::conjugated ? ComplexMatrix(p.matrix().conjugate()) : p.matrix();
      sum += kron(first, p.matrix());
    }
  }
  return hs_inner(HermitianOperator(sum), rho.op()) / rho.trace();
}

DetectionReport j_criterion(const DensityMatrix& rho, const MUM& mum, FactorConvention convention) {
  const double j = j_index(rho, mum, convention);
  const double threshold = 1.0 + mum.kappa;
  return {"j-index", j, threshold, j > threshold, mum.id, {}, to_string(convention)};
}

double isotropic_witness_value(int d, double alpha, double kappa) {
  if (d < 2) throw std::invalid_argument("isotropic_witness_value: d must be >= 2");
  if (!(alpha >= 0.0 && alpha < 1.0)) throw std::invalid_argument("isotropic_witness_value: alpha must be in [0, 1)");
  if (!(kappa > 1.0 / d && kappa <= 1.0)) {
    throw std::invalid_argument("isotropic_witness_value: kappa must be in (1/d, 1]");
  }
  return (1.0 + kappa) - (d + 1.0) * (alpha * kappa + (1.0 - alpha) / d);
}

CoincidenceSum coincidence_sum(const ComplexVector& phi, const MUM& mum) {
  if (phi.size() != mum.d) throw std::invalid_argument("coincidence_sum: vector dimension mismatch");
  if (std::abs(phi.norm() - 1.0) > 1e-10) throw std::invalid_argument("coincidence_sum: vector is not normalized");
  double value = 0.0;
  for (const auto& povm : mum.elements) {
    for (const auto& p : povm) {
      const double prob = phi.dot(p.matrix() * phi).real();
      value += prob * prob;
    }
  }
  const int d = mum.d;
  const double bound = (mum.L() - 1.0) / d + (1.0 - mum.kappa + mum.kappa * (d - 1.0)) / (d - 1.0);
  return {value, bound};
}

DetectionReport detect(const DensityMatrix& rho, const Witness& w, double margin) {
  if (margin < 0) throw std::invalid_argument("detect: margin must be non-negative");
  const double value = evaluate_witness(w, rho);
  return {"witness", value, 0.0, value < -margin, w.provenance.mum_id, w.provenance.angles,
          to_string(w.provenance.convention)};
}

}  // namespace mumw
