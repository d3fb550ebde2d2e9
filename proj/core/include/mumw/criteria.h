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


#ifndef MUMW_CRITERIA_H
#define MUMW_CRITERIA_H

#include <string>
#include <vector>

#include "mumw/measurements.h"
#include "mumw/states.h"
#include "mumw/witness.h"

namespace mumw {

/// Outcome of one separability test. `detected` means the state is certified
/// entangled by this criterion.
struct DetectionReport {
  std::string criterion;
  double value = 0.0;
  double threshold = 0.0;
  bool detected = false;
  std::string mum_id;
  std::vector<double> angles;
  std::string convention;
};

/// J(rho) = sum_b sum_n Tr(A(P_n^(b)) (x) P_n^(b) rho) / Tr(rho), A = conj or identity.
///
/// The trace division makes J a functional of the state rather than of its
/// transcription; it is a no-op for strict states. Requires a complete MUM
/// (L = d+1) and dim(rho) = d^2.
double j_index(const DensityMatrix& rho, const MUM& mum, FactorConvention convention = FactorConvention::conjugated);

/// Separable states satisfy J <= 1 + kappa. value = J, threshold = 1 + kappa.
DetectionReport j_criterion(const DensityMatrix& rho, const MUM& mum,
                            FactorConvention convention = FactorConvention::conjugated);

/// (1 + kappa) - (d + 1)(alpha kappa + (1 - alpha)/d): Tr(W rho_iso) for a
/// complete MUM witness with identity rotations. 0 <= alpha < 1, 1/d < kappa <= 1.
double isotropic_witness_value(int d, double alpha, double kappa);

struct CoincidenceSum {
  double value = 0.0;
  double bound = 0.0;
};

/// value = sum_a sum_l <phi|P_l^(a)|phi>^2,
/// bound = (L - 1)/d + (1 - kappa + kappa (d - 1))/(d - 1).
/// Throws unless |phi| = 1 within 1e-10 and dim(phi) = d.
CoincidenceSum coincidence_sum(const ComplexVector& phi, const MUM& mum);

/// value = Tr(W rho), threshold 0, detected iff value < -margin.
DetectionReport detect(const DensityMatrix& rho, const Witness& w, double margin = 1e-9);

}  // namespace mumw

#endif  // MUMW_CRITERIA_H
